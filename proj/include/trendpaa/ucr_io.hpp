#pragma once

#include "trendpaa/mining.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace trendpaa::ucr {

enum class Delimiter { autodetect, comma, tab, whitespace };

/// Malformed input: ragged rows, non-numeric fields, non-integral
/// labels. The message names the source and 1-based line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse UCR-style text: one series per line, first field the integer
/// class label, remaining fields the samples. Auto-detection tries
/// comma, then tab, then runs of spaces; the first delimiter splitting
/// line 1 into at least two fields wins. Real labels like "2.0" are
/// accepted when exactly integral.
LabeledDataset load_ucr_file(const std::filesystem::path& path,
                             Delimiter delim = Delimiter::autodetect);

/// Stream-level core of load_ucr_file; origin names the source in error
/// messages.
LabeledDataset parse_ucr(std::istream& in, const std::string& origin,
                         Delimiter delim = Delimiter::autodetect);

/// Write ds in the same row format with 17 significant digits, so a
/// reparse reproduces every value exactly. Delimiter autodetect means
/// comma here.
void write_ucr_file(const LabeledDataset& ds, const std::filesystem::path& path,
                    Delimiter delim = Delimiter::comma);

/// A named train/test split.
struct DatasetPair {
    LabeledDataset train;
    LabeledDataset test;
    std::string name;
};

/// Load both splits and check they agree on series length.
DatasetPair load_dataset_pair(const std::filesystem::path& train_path,
                              const std::filesystem::path& test_path,
                              const std::string& name);

struct DatasetSummary {
    std::string name;
    std::size_t classes = 0;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    std::size_t length = 0;
};

DatasetSummary dataset_summary(const DatasetPair& ds);

} // namespace trendpaa::ucr
