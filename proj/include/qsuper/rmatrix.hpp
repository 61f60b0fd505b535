#pragma once

// Braided R-matrices on a 1|2 superspace: braid and Yang-Baxter equations,
// involutivity and eigenprojectors, kernel relations, the compact form of
// the quadratic relations and the factorization at hh' = 0.

#include <string>
#include <utility>
#include <vector>

#include "qsuper/graded_matrix.hpp"
#include "qsuper/outcome.hpp"
#include "qsuper/presentation.hpp"

namespace qsuper {

struct RMatrixBundle {
  std::string name;
  ScalarMatrix rhat;
  Parities parities;  // of the 3-dimensional space
};

/// Parities (0,1,1) of the coordinates (x, theta1, theta2).
const Parities& superspace_parities();

RMatrixBundle build_rhat_pq();
RMatrixBundle build_rhat_hh();
/// R(param) with the recorded erratum applied unless `as_printed`.
ScalarMatrix build_r_h(const std::string& param = "h", bool as_printed = false);

/// Sign conventions for the supertranspose on composite indices I, J.
enum class StConvention { Plain, RowParity, ColParity, Total };
std::string st_convention_name(StConvention c);
const std::vector<StConvention>& all_st_conventions();
/// (A^st)_{IJ} = s(I,J) A_{JI} with s = 1, (-1)^{t(I)(t(I)+t(J))},
/// (-1)^{t(J)(t(I)+t(J))} or (-1)^{t(I)+t(J)}.
ScalarMatrix supertranspose(const ScalarMatrix& a, StConvention c);

/// Renames an odd parameter in every entry.
ScalarMatrix rename_odd_param(const ScalarMatrix& a, const std::string& from, const std::string& to);

/// "entry (r,c) = value" for the first nonzero entry, 1-based.
std::string matrix_witness(const ScalarMatrix& diff);

Outcome braid_check(const ScalarMatrix& rhat, const Parities& par, KronMode mode);
/// Yang-Baxter equation R12 R13 R23 = R23 R13 R12 with R13 = P12 R23 P12.
Outcome ybe_check(const ScalarMatrix& r, const Parities& par, KronMode mode);
Outcome involutive_check(const ScalarMatrix& rhat);

struct Projectors {
  ScalarMatrix plus, minus;
};
/// P+- = (I +- Rhat)/2. Throws NotInvolutive when Rhat^2 != I.
Projectors projectors(const ScalarMatrix& rhat);
/// Idempotence, completeness, orthogonality and Rhat = P+ - P-.
Outcome projector_laws(const ScalarMatrix& rhat);

/// Prefactor applied to the component x_k x_l of x (x) x.
enum class KernelSign { None, FirstFactor, SecondFactor, Product, Sum };
std::string kernel_sign_name(KernelSign s);
const std::vector<KernelSign>& all_kernel_signs();

/// Rows of Pmat * (x (x) x) over the free algebra on `coords`, reduced to a
/// minimal generating set of their Grassmann span.
std::vector<Relation> kernel_relations(const ScalarMatrix& pmat, const std::vector<GenId>& coords, KernelSign sign);

/// lhs * x_i x_j - sum Rhat_{(ij),(kl)} x_k x_l reduces to zero modulo p for
/// every composite index; `coords` lists x_1..x_n in matrix order.
Outcome compact_form_check(const ScalarMatrix& rhat, const Presentation& p, const std::vector<GenId>& coords,
                           const GrassmannScalar& lhs);

/// Replaces every odd parameter by a commuting even shadow symbol
/// ("h" -> "h_c"), reading products in their canonical order.
ScalarMatrix commutative_shadow(const ScalarMatrix& a);

struct DecomposeResult {
  Outcome outcome;
  StConvention convention = StConvention::Plain;
  bool printed_factor_passes = false;
  /// R_{h,h'} - R(h) R(h') with the hh' components kept.
  ScalarMatrix defect;
};
/// Checks R_{h,h'}|_{hh'=0} = R(h) R(h') with R(h') = R^st(h)|_{h->h'},
/// trying every supertranspose convention.
DecomposeResult decompose_check();

/// Free presentation (no relations) on the given generators.
Presentation free_presentation(const std::vector<GenId>& gens, std::string name = "free");

}  // namespace qsuper
