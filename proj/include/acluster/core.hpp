#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace acluster {

// Error hierarchy. Each family maps onto one CLI exit code.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data: ragged rows, unparsable numbers, empty files,
/// misaligned series.
class DataError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class FormatError : public DataError {
 public:
  using DataError::DataError;
};

class ParseError : public DataError {
 public:
  using DataError::DataError;
};

class EmptyDatasetError : public DataError {
 public:
  using DataError::DataError;
};

class AlignmentError : public DataError {
 public:
  using DataError::DataError;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class MisuseError : public Error {
 public:
  using Error::Error;
};

class UndefinedLabelError : public Error {
 public:
  using Error::Error;
};

/// Broken simulation invariant (conservation, exclusion). Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

using ItemId = std::uint32_t;

struct Item {
  ItemId id = 0;
  std::vector<double> features;
  std::optional<std::string> label;
};

/// Immutable after construction. d_max is the largest pairwise RMS feature
/// distance over the whole dataset (1 when every vector is identical).
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<Item> items);

  [[nodiscard]] const std::vector<Item>& items() const noexcept { return items_; }
  [[nodiscard]] const Item& item(ItemId id) const { return items_.at(id); }
  [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
  [[nodiscard]] std::size_t feature_dim() const noexcept { return feature_dim_; }
  [[nodiscard]] double d_max() const noexcept { return d_max_; }
  [[nodiscard]] bool labeled() const noexcept { return labeled_; }

  /// Sorted distinct labels; empty for an unlabeled dataset.
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Index into labels() for every item; all zero when unlabeled.
  [[nodiscard]] const std::vector<std::int32_t>& label_index() const noexcept {
    return label_index_;
  }

  /// Normalized distance between items by id; skips the bounds checks of
  /// normalized_distance() and is used on the simulation hot path.
  [[nodiscard]] double distance(ItemId a, ItemId b) const noexcept;

 private:
  std::vector<Item> items_;
  std::size_t feature_dim_ = 0;
  double d_max_ = 1.0;
  bool labeled_ = false;
  std::vector<std::string> labels_;
  std::vector<std::int32_t> label_index_;
};

struct LoadOptions {
  /// Treat the last column of every record as a class label.
  bool label_column = false;
};

/// Reads delimiter-separated records (comma or tab), one per line. Blank lines
/// and lines starting with '#' are skipped. Item ids follow record order.
Dataset load_dataset(std::istream& in, const LoadOptions& opts = {});
Dataset load_dataset_file(const std::string& path, const LoadOptions& opts = {});

/// Writes features (and the label, when present) as comma-separated text that
/// load_dataset reads back unchanged. Doubles are printed round-trip exact.
void write_dataset(std::ostream& out, const Dataset& data);

/// Un-normalized RMS distance sqrt((1/F) * sum_i (a_i - b_i)^2).
double rms_distance(const std::vector<double>& a, const std::vector<double>& b);

/// rms_distance divided by the dataset's d_max; in [0,1] for members.
double normalized_distance(const Item& a, const Item& b, const Dataset& data);

}  // namespace acluster
