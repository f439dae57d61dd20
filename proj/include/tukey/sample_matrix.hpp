#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tukey/rng.hpp"

namespace tukey {

/// Where a sample came from; absent for data read from disk.
struct Provenance {
    std::string law;
    Seed seed = 0;
};

/// Immutable n x d block of finite observations, stored row-major.
class SampleMatrix {
public:
    SampleMatrix(std::size_t rows, std::size_t dim, std::vector<double> data,
                 std::optional<Provenance> provenance = std::nullopt);

    /// One-column sample.
    static SampleMatrix from_column(std::vector<double> values);

    std::size_t rows() const { return rows_; }
    std::size_t dim() const { return dim_; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
    std::span<const double> data() const { return data_; }
    std::vector<double> column(std::size_t j) const;
    const std::optional<Provenance>& provenance() const { return provenance_; }

    /// First `count` rows, provenance kept.
    SampleMatrix head(std::size_t count) const;

private:
    std::size_t rows_;
    std::size_t dim_;
    std::vector<double> data_;
    std::optional<Provenance> provenance_;
};

/// Headerless CSV: one row per observation, 17 significant digits.
void write_csv(std::ostream& out, const SampleMatrix& sample);
void write_csv(const std::string& path, const SampleMatrix& sample);

/// Parses headerless CSV; the dimension is taken from the first row and every
/// later row must match it. Blank lines are skipped.
SampleMatrix read_csv(std::istream& in, const std::string& source_name = "<stream>");
SampleMatrix read_csv(const std::string& path);

/// Parses "x1,x2,..." into finite doubles.
std::vector<double> parse_vector(const std::string& text);

/// printf("%.17g").
std::string format_double(double value);

}  // namespace tukey
