#include "qsuper/presentation.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "qsuper/errors.hpp"
#include "qsuper/parse.hpp"

namespace qsuper {
namespace {

struct WordGreater {
  const Presentation* p;
  bool operator()(const Word& a, const Word& b) const { return p->word_less(b, a); }
};

bool has_body(const GrassmannScalar& c) { return !c.body().is_zero(); }

// u * (c w) * v with the coefficient moved to the front.
void add_placed(SuperPolynomial& out, const Word& u, const SuperPolynomial& mid, const Word& v,
                const GrassmannScalar& coef) {
  const bool odd_prefix = word_parity(u) != 0;
  for (const auto& [w, c] : mid.terms()) {
    Word full;
    full.reserve(u.size() + w.size() + v.size());
    full.insert(full.end(), u.begin(), u.end());
    full.insert(full.end(), w.begin(), w.end());
    full.insert(full.end(), v.begin(), v.end());
    out.add_term(full, coef * (odd_prefix ? c.twist() : c));
  }
}

std::string rule_str(const RewriteRule& r) { return word_str(r.lhs) + " -> " + r.rhs.str(); }

}  // namespace

std::string ConfluenceReport::str() const {
  if (confluent) return "confluent (" + std::to_string(pairs_checked) + " critical pairs)";
  const auto& f = *failure;
  return "non-joinable overlap " + word_str(f.overlap) + ": rules #" + std::to_string(f.rule_a) + " and #" +
         std::to_string(f.rule_b) + " give " + f.reduced_a.str() + " vs " + f.reduced_b.str();
}

void Presentation::register_gens(const std::vector<GeneratorSpec>& generators) {
  gens_.clear();
  rank_.clear();
  for (const auto& g : generators) {
    GenId id = register_generator(g.name, g.parity);
    if (std::find(gens_.begin(), gens_.end(), id) != gens_.end())
      throw SignatureError("duplicate generator '" + g.name + "'");
    gens_.push_back(id);
    if (rank_.size() <= id) rank_.resize(static_cast<std::size_t>(id) + 1, -1);
    rank_[id] = static_cast<int>(gens_.size()) - 1;
  }
}

std::vector<GeneratorSpec> Presentation::generator_specs() const {
  std::vector<GeneratorSpec> out;
  for (GenId g : gens_) out.push_back({generator_name(g), generator_parity(g)});
  return out;
}

GenId Presentation::gen(std::string_view name) const {
  auto id = find_generator(name);
  if (!id || !has_generator(*id))
    throw UnknownGenerator("'" + std::string(name) + "' is not a generator of " + name_);
  return *id;
}

bool Presentation::has_generator(GenId g) const { return g < rank_.size() && rank_[g] >= 0; }

int Presentation::rank(GenId g) const {
  if (!has_generator(g)) throw UnknownGenerator("'" + generator_name(g) + "' is not a generator of " + name_);
  return rank_[g];
}

bool Presentation::word_less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ra = rank(a[i]), rb = rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

SuperPolynomial Presentation::parse(std::string_view text) const { return parse_superpoly(text, gens_); }

void Presentation::check_rule(const RewriteRule& r) const {
  if (r.lhs.empty()) throw TerminationError("rule with empty left side");
  for (GenId g : r.lhs) rank(g);
  const int lp = word_parity(r.lhs);
  const int rp = r.rhs.parity();
  if (!r.rhs.is_zero() && rp != lp)
    throw SignatureError("rule " + rule_str(r) + " does not preserve parity");
  for (const auto& [w, c] : r.rhs.terms()) {
    for (GenId g : w) rank(g);
    if (has_body(c) && !word_less(w, r.lhs))
      throw TerminationError("rule " + rule_str(r) + " is not decreasing at word " + word_str(w));
  }
}

void Presentation::index_rules() {
  by_first_.assign(gens_.size(), {});
  for (std::size_t i = 0; i < rules_.size(); ++i)
    by_first_[static_cast<std::size_t>(rank(rules_[i].lhs[0]))].push_back(i);
}

std::optional<std::pair<std::size_t, std::size_t>> Presentation::find_match(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t ri : by_first_[static_cast<std::size_t>(rank(w[i]))]) {
      const Word& l = rules_[ri].lhs;
      if (i + l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) return std::make_pair(i, ri);
    }
  }
  return std::nullopt;
}

bool Presentation::is_irreducible(const Word& w) const { return !find_match(w).has_value(); }

SuperPolynomial Presentation::normal_form(const SuperPolynomial& x) const {
  std::map<Word, GrassmannScalar, WordGreater> work(WordGreater{this});
  auto push = [&](const Word& w, const GrassmannScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = work.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) work.erase(it);
  };
  for (const auto& [w, c] : x.terms()) {
    for (GenId g : w) rank(g);
    push(w, c);
  }
  SuperPolynomial result;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key();
    const GrassmannScalar& c = node.mapped();
    auto m = find_match(w);
    if (!m) {
      result.add_term(w, c);
      continue;
    }
    const auto [pos, ri] = *m;
    const RewriteRule& rule = rules_[ri];
    Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    Word v(w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
    const bool odd_prefix = word_parity(u) != 0;
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      Word full;
      full.reserve(u.size() + rw.size() + v.size());
      full.insert(full.end(), u.begin(), u.end());
      full.insert(full.end(), rw.begin(), rw.end());
      full.insert(full.end(), v.begin(), v.end());
      push(full, c * (odd_prefix ? rc.twist() : rc));
    }
  }
  return result;
}

ConfluenceReport Presentation::check_local_confluence(std::size_t max_length) const {
  ConfluenceReport rep;
  auto test = [&](const Word& overlap, std::size_t a, std::size_t b, const SuperPolynomial& ra,
                  const SuperPolynomial& rb) {
    ++rep.pairs_checked;
    SuperPolynomial na = normal_form(ra), nb = normal_form(rb);
    if (na == nb) return true;
    rep.confluent = false;
    rep.failure = CriticalPair{overlap, a, b, na, nb};
    return false;
  };
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& li = rules_[i].lhs;
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      const Word& lj = rules_[j].lhs;
      // Proper overlaps: suffix of li equals prefix of lj.
      for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
        if (li.size() + lj.size() - k > max_length) continue;
        if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin())) continue;
        Word overlap = li;
        overlap.insert(overlap.end(), lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end());
        Word tail(lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end());
        Word head(li.begin(), li.end() - static_cast<std::ptrdiff_t>(k));
        SuperPolynomial ra, rb;
        add_placed(ra, {}, rules_[i].rhs, tail, GrassmannScalar(1));
        add_placed(rb, head, rules_[j].rhs, {}, GrassmannScalar(1));
        if (!test(overlap, i, j, ra, rb)) return rep;
      }
      // Inclusions: lj occurs inside li.
      if (i == j || lj.size() > li.size() || li.size() > max_length) continue;
      for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
        if (!std::equal(lj.begin(), lj.end(), li.begin() + static_cast<std::ptrdiff_t>(p))) continue;
        Word head(li.begin(), li.begin() + static_cast<std::ptrdiff_t>(p));
        Word tail(li.begin() + static_cast<std::ptrdiff_t>(p + lj.size()), li.end());
        SuperPolynomial rb;
        add_placed(rb, head, rules_[j].rhs, tail, GrassmannScalar(1));
        if (!test(li, i, j, rules_[i].rhs, rb)) return rep;
      }
    }
  }
  return rep;
}

Presentation Presentation::from_rules(std::string name, const std::vector<GeneratorSpec>& generators,
                                      std::vector<RewriteRule> rules) {
  Presentation p;
  p.name_ = std::move(name);
  p.register_gens(generators);
  for (const auto& r : rules) {
    p.check_rule(r);
    p.relations_.push_back({SuperPolynomial(r.lhs) - r.rhs, r.label});
  }
  p.rules_ = std::move(rules);
  p.index_rules();
  return p;
}

Presentation Presentation::from_relations(std::string name, const std::vector<GeneratorSpec>& generators,
                                          const std::vector<Relation>& relations) {
  Presentation p;
  p.name_ = std::move(name);
  p.register_gens(generators);
  p.index_rules();
  for (const auto& rel : relations) {
    if (rel.poly.parity() < 0)
      throw SignatureError("relation '" + rel.label + "' is not parity-homogeneous: " + rel.poly.str());
    p.relations_.push_back(rel);
    SuperPolynomial r = p.normal_form(rel.poly);
    if (r.is_zero()) {
      p.redundant_.push_back(rel);
      continue;
    }
    const Word* lead = nullptr;
    for (const auto& [w, c] : r.terms())
      if (has_body(c) && (!lead || p.word_less(*lead, w))) lead = &w;
    if (!lead)
      throw NonOrientableRelation("relation '" + rel.label + "' has no parameter-free leading term: " + r.str());
    const Word lhs = *lead;
    GrassmannScalar cinv = r.coefficient(lhs).inverse();
    SuperPolynomial rest = r - SuperPolynomial(lhs, r.coefficient(lhs));
    RewriteRule rule{lhs, (-rest).left_scaled(cinv), rel.label};
    p.check_rule(rule);
    p.rules_.push_back(std::move(rule));
    p.index_rules();
  }
  for (std::size_t i = 0; i < p.rules_.size(); ++i) p.rules_[i].rhs = p.normal_form(p.rules_[i].rhs);
  return p;
}

SuperPolynomial normal_form(const SuperPolynomial& x, const Presentation& p) { return p.normal_form(x); }

ConfluenceReport check_local_confluence(const Presentation& p) { return p.check_local_confluence(4); }

GenId tensor_generator(GenId g, int factor) {
  return register_generator(generator_name(g) + "@" + std::to_string(factor), generator_parity(g));
}

Word tensor_word(const Word& w, int factor) {
  Word out;
  out.reserve(w.size());
  for (GenId g : w) out.push_back(tensor_generator(g, factor));
  return out;
}

SuperPolynomial embed_factor(const SuperPolynomial& x, int factor) {
  SuperPolynomial r;
  for (const auto& [w, c] : x.terms()) r.add_term(tensor_word(w, factor), c);
  return r;
}

Presentation tensor_product(const std::vector<const Presentation*>& factors, std::string name) {
  if (name.empty()) {
    for (const auto* f : factors) name += (name.empty() ? "" : " (x) ") + f->name();
  }
  std::vector<GeneratorSpec> gens;
  std::vector<RewriteRule> rules;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const int tag = static_cast<int>(k) + 1;
    for (GenId g : factors[k]->generators())
      gens.push_back({generator_name(tensor_generator(g, tag)), generator_parity(g)});
    for (const auto& r : factors[k]->rules())
      rules.push_back({tensor_word(r.lhs, tag), embed_factor(r.rhs, tag), r.label + "@" + std::to_string(tag)});
  }
  for (std::size_t j = 0; j < factors.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      for (GenId a : factors[j]->generators())
        for (GenId b : factors[i]->generators()) {
          GenId aj = tensor_generator(a, static_cast<int>(j) + 1);
          GenId bi = tensor_generator(b, static_cast<int>(i) + 1);
          const int sign = (as_int(generator_parity(a)) & as_int(generator_parity(b))) ? -1 : 1;
          rules.push_back({Word{aj, bi}, SuperPolynomial(Word{bi, aj}, GrassmannScalar(sign)),
                           "graded flip " + generator_name(aj) + " " + generator_name(bi)});
        }
  return Presentation::from_rules(std::move(name), gens, std::move(rules));
}

Presentation tensor_square(const Presentation& p) { return tensor_product({&p, &p}); }

}  // namespace qsuper
