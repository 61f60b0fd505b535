#include "qsuper/rmatrix.hpp"

#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/relspan.hpp"

namespace qsuper {

const Parities& superspace_parities() {
  static const Parities p{0, 1, 1};
  return p;
}

RMatrixBundle build_rhat_pq() { return {"rhat_pq", fixture_rmatrix("rhat_pq"), superspace_parities()}; }
RMatrixBundle build_rhat_hh() { return {"rhat_hh", fixture_rmatrix("rhat_hh"), superspace_parities()}; }

ScalarMatrix build_r_h(const std::string& param, bool as_printed) {
  ScalarMatrix r = fixture_rmatrix("r_h", as_printed);
  return param == "h" ? r : rename_odd_param(r, "h", param);
}

std::string st_convention_name(StConvention c) {
  switch (c) {
    case StConvention::Plain: return "plain transpose";
    case StConvention::RowParity: return "(-1)^{t(I)(t(I)+t(J))}";
    case StConvention::ColParity: return "(-1)^{t(J)(t(I)+t(J))}";
    case StConvention::Total: return "(-1)^{t(I)+t(J)}";
  }
  return "?";
}

const std::vector<StConvention>& all_st_conventions() {
  static const std::vector<StConvention> all{StConvention::Plain, StConvention::RowParity, StConvention::ColParity,
                                             StConvention::Total};
  return all;
}

ScalarMatrix supertranspose(const ScalarMatrix& a, StConvention c) {
  ScalarMatrix t(a.col_parities(), a.row_parities());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const int ti = t.row_parities()[i], tj = t.col_parities()[j];
      int s = 0;
      if (c == StConvention::RowParity) s = ti * (ti + tj);
      if (c == StConvention::ColParity) s = tj * (ti + tj);
      if (c == StConvention::Total) s = ti + tj;
      t(i, j) = (s & 1) ? -a(j, i) : a(j, i);
    }
  return t;
}

ScalarMatrix rename_odd_param(const ScalarMatrix& a, const std::string& from, const std::string& to) {
  auto f = find_param(from);
  if (!f || f->parity != Parity::Odd) throw UnknownSymbol("unknown odd parameter '" + from + "'");
  const std::map<int, GrassmannScalar> img{{f->index, GrassmannScalar::odd_param(to)}};
  return a.map([&](const GrassmannScalar& e) { return e.substitute_odd(img); });
}

std::string matrix_witness(const ScalarMatrix& diff) {
  auto pos = diff.first_nonzero();
  if (!pos) return "";
  return "entry (" + std::to_string(pos->first + 1) + "," + std::to_string(pos->second + 1) +
         ") of the difference = " + diff(pos->first, pos->second).str();
}

namespace {

Outcome compare(const ScalarMatrix& lhs, const ScalarMatrix& rhs) {
  const ScalarMatrix d = lhs - rhs;
  return d.is_zero() ? Outcome::ok() : Outcome::fail(matrix_witness(d));
}

void require_square9(const ScalarMatrix& m, const Parities& par) {
  const std::size_t n = par.size() * par.size();
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("expected a " + std::to_string(n) + "x" +
                                                              std::to_string(n) + " matrix");
}

}  // namespace

Outcome braid_check(const ScalarMatrix& rhat, const Parities& par, KronMode mode) {
  require_square9(rhat, par);
  const ScalarMatrix id = ScalarMatrix::identity(par);
  const ScalarMatrix r12 = graded_kron(rhat, id, mode);
  const ScalarMatrix r23 = graded_kron(id, rhat, mode);
  Outcome o = compare(r12 * r23 * r12, r23 * r12 * r23);
  o.note("kronecker sign: " + kron_mode_name(mode));
  o.note("R23 = I3 (x) Rhat");
  return o;
}

Outcome ybe_check(const ScalarMatrix& r, const Parities& par, KronMode mode) {
  require_square9(r, par);
  const ScalarMatrix id = ScalarMatrix::identity(par);
  const ScalarMatrix r12 = graded_kron(r, id, mode);
  const ScalarMatrix r23 = graded_kron(id, r, mode);
  const ScalarMatrix p12 = graded_kron(super_permutation(par, mode != KronMode::Ungraded), id, mode);
  const ScalarMatrix r13 = p12 * r23 * p12;
  Outcome o = compare(r12 * r13 * r23, r23 * r13 * r12);
  o.note("kronecker sign: " + kron_mode_name(mode));
  return o;
}

Outcome involutive_check(const ScalarMatrix& rhat) {
  return compare(rhat * rhat, ScalarMatrix::identity(rhat.row_parities()));
}

Projectors projectors(const ScalarMatrix& rhat) {
  const Outcome inv = involutive_check(rhat);
  if (!inv.pass) throw NotInvolutive("Rhat^2 != I: " + inv.witness);
  const ScalarMatrix id = ScalarMatrix::identity(rhat.row_parities());
  const GrassmannScalar half(GaussRational(mpq_class(1, 2)));
  return {(id + rhat).scaled(half), (id - rhat).scaled(half)};
}

Outcome projector_laws(const ScalarMatrix& rhat) {
  const Projectors p = projectors(rhat);
  const ScalarMatrix id = ScalarMatrix::identity(rhat.row_parities());
  const ScalarMatrix zero(rhat.row_parities(), rhat.col_parities());
  const std::pair<const char*, Outcome> laws[] = {
      {"P+^2 = P+", compare(p.plus * p.plus, p.plus)},   {"P-^2 = P-", compare(p.minus * p.minus, p.minus)},
      {"P+ + P- = I", compare(p.plus + p.minus, id)},    {"P+ P- = 0", compare(p.plus * p.minus, zero)},
      {"P- P+ = 0", compare(p.minus * p.plus, zero)},    {"Rhat = P+ - P-", compare(p.plus - p.minus, rhat)},
  };
  for (const auto& [name, o] : laws)
    if (!o.pass) return Outcome::fail(std::string(name) + ": " + o.witness);
  return Outcome::ok();
}

std::string kernel_sign_name(KernelSign s) {
  switch (s) {
    case KernelSign::None: return "none";
    case KernelSign::FirstFactor: return "(-1)^{t(x_k)}";
    case KernelSign::SecondFactor: return "(-1)^{t(x_l)}";
    case KernelSign::Product: return "(-1)^{t(x_k)t(x_l)}";
    case KernelSign::Sum: return "(-1)^{t(x_k)+t(x_l)}";
  }
  return "?";
}

const std::vector<KernelSign>& all_kernel_signs() {
  static const std::vector<KernelSign> all{KernelSign::None, KernelSign::FirstFactor, KernelSign::SecondFactor,
                                           KernelSign::Product, KernelSign::Sum};
  return all;
}

Presentation free_presentation(const std::vector<GenId>& gens, std::string name) {
  std::vector<GeneratorSpec> specs;
  for (GenId g : gens) specs.push_back({generator_name(g), generator_parity(g)});
  return Presentation::from_relations(std::move(name), specs, {});
}

std::vector<Relation> kernel_relations(const ScalarMatrix& pmat, const std::vector<GenId>& coords, KernelSign sign) {
  const std::size_t n = coords.size();
  if (pmat.rows() != n * n || pmat.cols() != n * n) throw DimensionMismatch("projector size does not match coordinates");
  OddMask closure = 0;
  std::vector<SuperPolynomial> rows;
  for (std::size_t a = 0; a < n * n; ++a) {
    SuperPolynomial r;
    for (std::size_t b = 0; b < n * n; ++b) {
      const GrassmannScalar& c = pmat(a, b);
      if (c.is_zero()) continue;
      closure |= c.odd_support();
      const GenId xk = coords[b / n], xl = coords[b % n];
      const int tk = as_int(generator_parity(xk)), tl = as_int(generator_parity(xl));
      int s = 0;
      if (sign == KernelSign::FirstFactor) s = tk;
      if (sign == KernelSign::SecondFactor) s = tl;
      if (sign == KernelSign::Product) s = tk * tl;
      if (sign == KernelSign::Sum) s = tk + tl;
      r.add_term(Word{xk, xl}, (s & 1) ? -c : c);
    }
    if (!r.is_zero()) rows.push_back(std::move(r));
  }
  const Presentation order = free_presentation(coords);
  RelationModule m(order, closure);
  for (const auto& r : rows) m.add(r);
  std::vector<Relation> out;
  for (auto& g : m.generators()) out.push_back({std::move(g), "kernel row"});
  return out;
}

Outcome compact_form_check(const ScalarMatrix& rhat, const Presentation& p, const std::vector<GenId>& coords,
                           const GrassmannScalar& lhs) {
  const std::size_t n = coords.size();
  if (rhat.rows() != n * n) throw DimensionMismatch("R-matrix size does not match the presentation");
  for (std::size_t a = 0; a < n * n; ++a) {
    SuperPolynomial r(Word{coords[a / n], coords[a % n]}, lhs);
    for (std::size_t b = 0; b < n * n; ++b)
      if (!rhat(a, b).is_zero()) r.add_term(Word{coords[b / n], coords[b % n]}, -rhat(a, b));
    const SuperPolynomial nf = p.normal_form(r);
    if (!nf.is_zero())
      return Outcome::fail("component (" + generator_name(coords[a / n]) + "," + generator_name(coords[a % n]) +
                           ") reduces to " + nf.str());
  }
  return Outcome::ok();
}

ScalarMatrix commutative_shadow(const ScalarMatrix& a) {
  return a.map([](const GrassmannScalar& e) {
    GrassmannScalar out;
    for (const auto& [mask, rf] : e.components()) {
      GrassmannScalar term(rf);
      for (int i = 0; (mask >> i) != 0; ++i)
        if ((mask >> i) & 1u) {
          const std::string name = odd_param_name(i) + "_c";
          register_param(name, Parity::Even);
          term = term * GrassmannScalar::even_param(name);
        }
      out += term;
    }
    return out;
  });
}

DecomposeResult decompose_check() {
  const ScalarMatrix rhat = build_rhat_hh().rhat;
  const ScalarMatrix r_hh = super_permutation(superspace_parities()) * rhat;
  const OddMask both = GrassmannScalar::odd_param("h").odd_support() | GrassmannScalar::odd_param("h'").odd_support();
  const ScalarMatrix truncated = r_hh.map([&](const GrassmannScalar& e) { return e.drop_containing(both); });
  DecomposeResult res;
  res.outcome = Outcome::fail("no supertranspose convention reproduces the factorization");
  for (bool printed : {false, true}) {
    const ScalarMatrix rh = build_r_h("h", printed);
    for (StConvention c : all_st_conventions()) {
      const ScalarMatrix rhp = rename_odd_param(supertranspose(rh, c), "h", "h'");
      const ScalarMatrix prod = rh * rhp;
      const ScalarMatrix d = truncated - prod.map([&](const GrassmannScalar& e) { return e.drop_containing(both); });
      if (!d.is_zero()) {
        if (!printed && c == all_st_conventions().back() && !res.outcome.pass)
          res.outcome.witness += "; last attempt: " + matrix_witness(d);
        continue;
      }
      if (printed) {
        res.printed_factor_passes = true;
        continue;
      }
      if (!res.outcome.pass) {
        res.outcome = Outcome::ok({"supertranspose convention: " + st_convention_name(c)});
        res.convention = c;
        res.defect = r_hh - prod;
      }
    }
  }
  if (res.outcome.pass && !res.printed_factor_passes)
    res.outcome.note("R(h) requires the recorded erratum at entry (7,3); the printed value fails");
  return res;
}

}  // namespace qsuper
