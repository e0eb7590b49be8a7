#pragma once

// Image membership for graded linear maps.
//
// Every map handled here preserves total degree, so im(eta) is the direct sum of
// eta(R_d). Membership of f is decided degree by degree with exact elimination,
// and a preimage is assembled from the per-degree solutions.

#include "mzlab/linmaps.hpp"
#include "mzlab/matrix.hpp"
#include "mzlab/polynomial.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

namespace mzlab {

inline constexpr unsigned kDefaultDegreeCap = 10;

/// eta restricted to R_d, written in the grlex-descending monomial basis.
class GradedImage {
public:
    struct Solution {
        bool member = false;
        /// Preimage coordinates, reduced modulo the kernel; meaningful only when member.
        Vector preimage;
        /// Target minus its projection onto the image rows.
        Vector residual;
    };

    GradedImage(const LinearMapSpec& spec, const Ring& ring, unsigned degree);

    unsigned degree() const noexcept { return degree_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    std::size_t rank() const noexcept { return image_.rank(); }
    const Ring& ring() const noexcept { return ring_; }
    const std::vector<MultiIndex>& basis_monomials() const noexcept { return basis_; }
    /// Column j holds the coordinates of eta(basis[j]).
    const Matrix& matrix() const noexcept { return matrix_; }
    /// Reduced row echelon basis of eta(R_d); payloads are preimages.
    const Echelon& image() const noexcept { return image_; }
    const Echelon& kernel() const noexcept { return kernel_; }

    /// The reduced basis of eta(R_d) as polynomials.
    std::vector<Polynomial> image_basis() const;

    Solution solve(Vector target) const;
    /// Preimage of a homogeneous polynomial of this degree, if any.
    std::optional<Polynomial> preimage(const Polynomial& f) const;

private:
    Ring ring_;
    unsigned degree_;
    std::vector<MultiIndex> basis_;
    Matrix matrix_;
    Echelon image_;
    Echelon kernel_;
};

/// Images of the given monomials under eta, in order.
std::vector<Polynomial> monomial_images(const LinearMapSpec& spec, const Ring& ring,
                                        const std::vector<MultiIndex>& monomials);

struct FailingComponent {
    unsigned degree;
    Polynomial residual;
};

struct MembershipVerdict {
    bool member = false;
    /// eta(witness) == f exactly whenever member.
    std::optional<Polynomial> witness;
    std::optional<FailingComponent> failing_component;
};

/// A map together with a cache of its per-degree images. Safe to share across threads.
class ImageEngine {
public:
    explicit ImageEngine(LinearMapSpec spec, unsigned degree_cap = kDefaultDegreeCap);

    const LinearMapSpec& spec() const noexcept { return spec_; }
    const Ring& ring() const noexcept { return ring_; }
    unsigned degree_cap() const noexcept { return cap_; }

    /// Throws DegreeCapExceeded above the cap.
    std::shared_ptr<const GradedImage> image(unsigned d) const;
    /// Builds the missing degrees concurrently.
    void prefetch(std::span<const unsigned> degrees) const;

    MembershipVerdict member(const Polynomial& f) const;
    bool is_member(const Polynomial& f) const { return member(f).member; }

    Polynomial apply(const Polynomial& f) const { return mzlab::apply(spec_, f); }

private:
    LinearMapSpec spec_;
    unsigned cap_;
    Ring ring_;
    mutable std::shared_mutex mu_;
    mutable std::map<unsigned, std::shared_ptr<const GradedImage>> cache_;
};

GradedImage image_basis(const LinearMapSpec& spec, unsigned d, unsigned degree_cap = kDefaultDegreeCap);
MembershipVerdict member(const LinearMapSpec& spec, const Polynomial& f, unsigned degree_cap = kDefaultDegreeCap);

/// prod_i alpha_i^beta_i with 0^0 = 1.
Scalar alpha_power(std::span<const Scalar> alpha, const MultiIndex& beta);
/// alpha * beta.
Scalar alpha_dot(std::span<const Scalar> alpha, const MultiIndex& beta);

/// Closed-form answer to "X^beta in im eta?" for a canonical case. std::nullopt where no
/// closed form applies (nilpotent single block, or a root-of-unity block with m | |beta|),
/// in which case the caller falls back to member(). Throws PreconditionError for beta = 0.
std::optional<bool> monomial_member_closed_form(const CanonicalCase& c, const MultiIndex& beta);

/// Descending elimination: repeatedly cancel the leading term c X^gamma of the residual with
/// (c / a_gamma) eta(X^gamma). Throws LtConditionViolated when LT(eta(X^gamma)) is not a_gamma X^gamma
/// with a_gamma != 0.
Polynomial lt_triangular_preimage(const LinearMapSpec& spec, const MonomialOrder& order, const MultiIndex& beta);

/// Explicit preimage of X^beta for the jordan2 derivation and E-derivation, following the
/// recurrences behind the (x_n)-ideal containment. Throws PreconditionError outside the member region.
Polynomial constructive_preimage(const CanonicalCase& c, const MultiIndex& beta);

/// Membership for a jordan2 case: the (x_n) part is always in the image, and the rest must pass
/// the diagonal test monomial by monomial.
MembershipVerdict quotient_member(const CanonicalCase& c, const Polynomial& f);

struct BCDecomposition {
    unsigned m;
    /// Components of degree divisible by m.
    Polynomial b_part;
    Polynomial c_part;
};

BCDecomposition bc_decompose(const Polynomial& f, unsigned m);

enum class Identity {
    lemC,              ///< delta_a(C_d) = C_d
    lemDB,             ///< delta_a(B_d) = D(B_d)
    delta_contains_D,  ///< delta_a(R_d) contains D(R_d)
    exp_image,         ///< (1 - e^D)(R_d) = D(R_d)
};

std::string to_string(Identity id);
std::optional<Identity> identity_from_name(const std::string& name);

/// The maps the identities are stated for. Replaceable so that tests can inject faults.
struct IdentityMaps {
    std::function<Matrix(const Scalar& a)> phi = phi_a_matrix;
    std::function<LinearMapSpec(Field)> derivation = standard_nilpotent_derivation;
};

struct IdentityReport {
    Identity identity;
    unsigned m;
    unsigned degree;
    std::size_t lhs_rank;
    std::size_t rhs_rank;
    /// "equal" or "contained".
    std::string relation;
    bool holds;
    double elapsed_ms;
};

/// Compares the relevant restricted images on R_d with a = zeta_m. Throws PreconditionError for m = 0.
IdentityReport verify_subspace_identity(Identity id, unsigned m, unsigned d, const IdentityMaps& maps = {});

/// e^D equals phi_1 on every generator.
bool exp_matches_phi_one(const IdentityMaps& maps = {});

struct OmegaSweepReport {
    unsigned max_degree;
    std::size_t checked = 0;
    std::vector<MultiIndex> violations;
    /// (monomial, witness) for every checked monomial, grlex-descending by degree.
    std::vector<std::pair<MultiIndex, Polynomial>> witnesses;
};

/// Checks X^beta in im eta for every |beta| <= d_max with omega * beta < 0.
OmegaSweepReport omega_member_sweep(const ImageEngine& engine, unsigned d_max,
                                    const WeightVector& omega = default_omega());

}  // namespace mzlab
