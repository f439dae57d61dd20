#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tukey/rng.hpp"
#include "tukey/sample_matrix.hpp"
#include "tukey/stable.hpp"

namespace tukey {

/// COUPLED: cf exp(-||t||_1^alpha). INDEPENDENT: cf exp(-sum_j |t_j|^alpha),
/// i.e. i.i.d. symmetric alpha-stable coordinates.
enum class LawKind { Coupled, Independent };

std::string to_string(LawKind kind);
LawKind parse_law_kind(const std::string& text);

/// Nonzero direction vector. Consumers must be invariant to positive rescaling.
class Direction {
public:
    explicit Direction(std::vector<double> components);

    std::span<const double> components() const { return components_; }
    std::size_t dim() const { return components_.size(); }
    double operator[](std::size_t j) const { return components_[j]; }

private:
    std::vector<double> components_;
};

/// (sum_j |u_j|^index)^(1/index), or max_j |u_j| for an infinite index.
/// Computed on u / max|u_j| to avoid under- and overflow.
double lp_norm(std::span<const double> u, double index);

/// A d-variate law whose characteristic function depends on t only through an
/// l_p quasi-norm; every coordinate has the StableLaw1D(alpha) marginal.
class AlphaSymmetricLaw {
public:
    AlphaSymmetricLaw(LawKind kind, std::size_t dim, double alpha);

    LawKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    double alpha() const { return alpha_; }
    StableLaw1D marginal() const { return StableLaw1D(alpha_); }

    /// Index p of the norm for which u'Z has the law of ||u||_p Z_1:
    /// 1 for COUPLED, alpha for INDEPENDENT.
    double projection_norm_index() const;

    double cf(std::span<const double> t) const;

    /// INDEPENDENT: i.i.d. stable coordinates (row-major draw order).
    /// COUPLED: V * (C_1, ..., C_d) with V ~ Levy(1/2) and C_j standard Cauchy,
    /// one V per row then the d Cauchy draws. COUPLED is only provided for
    /// alpha = 1/2 and throws UnsupportedParameter otherwise.
    SampleMatrix sample(std::size_t n, Seed seed) const;

    std::string describe() const;

private:
    LawKind kind_;
    std::size_t dim_;
    double alpha_;
};

struct DualNormResult {
    double value;
    Direction witness;
};

/// inf over u != 0 of (u'x) / ||u||_alpha for alpha in (0, 1], which is
/// -||x||_inf. The witness is -sign(x_j) e_j at the first j maximizing |x_j|,
/// and e_1 for x = 0.
DualNormResult dual_norm_inf(std::span<const double> x, double alpha);

/// F(-||x||_inf) with F the common marginal; identical for both kinds.
double closed_form_depth(const AlphaSymmetricLaw& law, std::span<const double> x,
                         const InversionOptions& options = {});

/// (u' row_i) / ||u||_norm_index for every row.
std::vector<double> project_scaled(const SampleMatrix& sample, const Direction& u, double norm_index);

}  // namespace tukey
