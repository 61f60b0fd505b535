#include "qsuper/relspan.hpp"

#include <bit>

#include "qsuper/errors.hpp"

namespace qsuper {

bool RelationModule::ColLess::operator()(const Col& a, const Col& b) const {
  if (a.level != b.level) return a.level < b.level;
  if (a.word != b.word) return order->word_less(b.word, a.word);
  return a.mask < b.mask;
}

RelationModule::RelationModule(const Presentation& order, OddMask closure)
    : order_(&order), closure_(closure), rows_(ColLess{&order}) {}

RelationModule::Row RelationModule::to_row(const SuperPolynomial& p) const {
  Row r(ColLess{order_});
  for (const auto& [w, c] : p.terms())
    for (const auto& [mask, rf] : c.components()) r.emplace(Col{std::popcount(mask), w, mask}, rf);
  return r;
}

SuperPolynomial RelationModule::from_row(const Row& r) {
  SuperPolynomial p;
  for (const auto& [col, rf] : r) p.add_term(col.word, GrassmannScalar::odd_monomial(col.mask, rf));
  return p;
}

void RelationModule::reduce(Row& r) const {
  auto it = r.begin();
  while (it != r.end()) {
    auto piv = rows_.find(it->first);
    if (piv == rows_.end()) {
      ++it;
      continue;
    }
    const RationalFunction f = it->second;
    const Col key = it->first;
    for (const auto& [col, rf] : piv->second) {
      auto [pos, fresh] = r.try_emplace(col, -(f * rf));
      if (!fresh) {
        pos->second -= f * rf;
        if (pos->second.is_zero()) r.erase(pos);
      }
    }
    it = r.upper_bound(key);
  }
}

void RelationModule::insert(Row r) {
  reduce(r);
  if (r.empty()) return;
  const RationalFunction inv = r.begin()->second.inverse();
  for (auto& [col, rf] : r) rf *= inv;
  const Col pivot = r.begin()->first;
  // Keep the stored rows fully reduced against each other.
  for (auto& [pc, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit == row.end()) continue;
    const RationalFunction f = hit->second;
    for (const auto& [col, rf] : r) {
      auto [pos, fresh] = row.try_emplace(col, -(f * rf));
      if (!fresh) {
        pos->second -= f * rf;
        if (pos->second.is_zero()) row.erase(pos);
      }
    }
  }
  rows_.emplace(pivot, std::move(r));
}

void RelationModule::add(const SuperPolynomial& r) {
  for (OddMask mu = closure_;; mu = (mu - 1) & closure_) {
    insert(to_row(SuperPolynomial(GrassmannScalar::odd_monomial(mu)) * r));
    if (mu == 0) break;
  }
}

bool RelationModule::contains(const SuperPolynomial& r) const {
  Row row = to_row(r);
  reduce(row);
  return row.empty();
}

std::vector<SuperPolynomial> RelationModule::echelon_basis() const {
  std::vector<SuperPolynomial> out;
  for (const auto& [pc, row] : rows_) out.push_back(from_row(row));
  return out;
}

std::vector<SuperPolynomial> RelationModule::generators() const {
  RelationModule acc(*order_, closure_);
  std::vector<SuperPolynomial> out;
  for (const auto& [pc, row] : rows_) {
    SuperPolynomial p = from_row(row);
    if (acc.contains(p)) continue;
    acc.add(p);
    out.push_back(std::move(p));
    if (acc.rank() == rank()) break;
  }
  return out;
}

SuperPolynomial RelationModule::monic(const SuperPolynomial& r) const {
  const Row row = to_row(r);
  if (row.empty()) return r;
  return r.left_scaled(GrassmannScalar(row.begin()->second.inverse()));
}

std::string EquivVerdict::str() const {
  if (equal) return "equal";
  return direction + ": " + (witness ? witness->label + " (" + witness->poly.str() + ")" : std::string("?"));
}

OddMask odd_support(const std::vector<Relation>& rels) {
  OddMask m = 0;
  for (const auto& r : rels)
    for (const auto& [w, c] : r.poly.terms()) m |= c.odd_support();
  return m;
}

EquivVerdict ideal_equiv(const std::vector<Relation>& a, const std::vector<Relation>& b,
                         const Presentation& order) {
  for (const auto* side : {&a, &b})
    for (const auto& r : *side)
      for (const auto& [w, c] : r.poly.terms())
        if (w.size() != 2)
          throw NonQuadraticRelation("relation '" + r.label + "' has a term of length " +
                                     std::to_string(w.size()));
  const OddMask closure = odd_support(a) | odd_support(b);
  RelationModule ma(order, closure), mb(order, closure);
  for (const auto& r : a) ma.add(r.poly);
  for (const auto& r : b) mb.add(r.poly);
  EquivVerdict v;
  for (const auto& r : a)
    if (!mb.contains(r.poly)) {
      v.equal = false;
      v.witness = r;
      v.direction = "first-not-in-second";
      return v;
    }
  for (const auto& r : b)
    if (!ma.contains(r.poly)) {
      v.equal = false;
      v.witness = r;
      v.direction = "second-not-in-first";
      return v;
    }
  return v;
}

}  // namespace qsuper
