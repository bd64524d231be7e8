#include "hassett/constructions.hpp"

#include "hassett/criteria.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hassett {
namespace {

using Table = std::vector<std::string>;

struct CaseDef {
  CaseId id;
  std::string_view name;
  std::vector<int> residues;
  Table gram;
};

SlotKind u_slot(int copy) { return {SlotFamily::U, copy, 0}; }
SlotKind a2_slot(int copy) { return {SlotFamily::A2, copy, 0}; }
SlotKind e8_slot(int copy, int root) { return {SlotFamily::E8, copy, root}; }

// Printed Gram displays, one string per row. Tokens: integer constants,
// "2n5" for 2 n_5, "r3.4" for sqrt(n_3 n_4), joined by + and -.
const Table kLemma1 = {
    "3 0 0 0",
    "0 2n1 0 0",
    "0 0 2n2 0",
    "0 0 0 2n3",
};
const Table kLemma2 = {
    "3 0 0 1",
    "0 2n1 0 0",
    "0 0 2n2 0",
    "1 0 0 2n3+1",
};
const Table kLemma3 = {
    "3 0 1 1",
    "0 2n1 0 0",
    "1 0 2n2+1 0",
    "1 0 0 2n3+1",
};
const Table kLemma4 = {
    "3 1 1 1",
    "1 2n1+1 0 0",
    "1 0 2n2+1 0",
    "1 0 0 2n3+1",
};
const Table kRank5Zero = {
    "3 0 0 0 0",
    "0 2n1 0 0 0",
    "0 0 2n2 0 0",
    "0 0 0 2n3 r3.4",
    "0 0 0 r3.4 2n4",
};
const Table kThm2 = {
    "3 0 0 0 1",
    "0 2n1 0 0 0",
    "0 0 2n2 0 0",
    "0 0 0 2n3 r3.4",
    "1 0 0 r3.4 2n4+1",
};
const Table kThm3 = {
    "3 0 0 1 1",
    "0 2n1 0 0 0",
    "0 0 2n2 0 0",
    "1 0 0 2n3+1 r3.4",
    "1 0 0 r3.4 2n4+1",
};
const Table kThm4 = {
    "3 0 1 1 1",
    "0 2n1 0 0 0",
    "1 0 2n2+1 0 0",
    "1 0 0 2n3+1 r3.4",
    "1 0 0 r3.4 2n4+1",
};
const Table kThm5 = {
    "3 1 1 1 1",
    "1 2n1+1 0 0 0",
    "1 0 2n2+1 0 0",
    "1 0 0 2n3+1 r3.4",
    "1 0 0 r3.4 2n4+1",
};

// Rank-21 displays as blocks A (11x11), B (11x10), C (10x10).
const Table kZeroA = {
    "3 0 0 0 0 0 0 0 0 0 0",
    "0 2n1 0 0 0 0 0 0 0 0 0",
    "0 0 2n2 0 0 0 0 0 0 0 0",
    "0 0 0 2n3 r3.4 0 0 0 0 0 0",
    "0 0 0 r3.4 2n4 0 0 0 0 0 0",
    "0 0 0 0 0 2n5 0 0 0 0 0",
    "0 0 0 0 0 0 2n6 0 0 0 0",
    "0 0 0 0 0 0 0 2n7 0 0 0",
    "0 0 0 0 0 0 0 0 2n8 0 0",
    "0 0 0 0 0 0 0 0 0 2n9 0",
    "0 0 0 0 0 0 0 0 0 0 2n10",
};
const Table kZeroB = {
    "0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0",
    "-r5.11 0 0 0 0 0 0 0 0 0",
    "-r6.11 0 -r6.13 0 0 0 0 0 -r6.19 0",
    "0 0 0 0 -r7.15 0 0 0 -r7.19 0",
    "0 -r8.12 0 0 0 0 0 0 0 0",
    "0 -r9.12 0 -r9.14 0 0 0 0 0 -r9.20",
    "0 0 0 0 0 -r10.16 0 0 0 -r10.20",
};
const Table kZeroC = {
    "2n11 0 0 0 0 0 0 0 0 0",
    "0 2n12 0 0 0 0 0 0 0 0",
    "0 0 2n13 0 0 0 0 0 0 0",
    "0 0 0 2n14 0 0 0 0 0 0",
    "0 0 0 0 2n15 0 -r15.17 0 0 0",
    "0 0 0 0 0 2n16 0 -r16.18 0 0",
    "0 0 0 0 -r15.17 0 2n17 0 0 0",
    "0 0 0 0 0 -r16.18 0 2n18 0 0",
    "0 0 0 0 0 0 0 0 2n19 0",
    "0 0 0 0 0 0 0 0 0 2n20",
};
const Table kTwoA = {
    "3 1 1 1 1 1 1 1 1 1 1",
    "1 2n1+1 0 0 1 0 0 0 1 0 0",
    "1 0 2n2+1 1 0 0 0 1 0 0 0",
    "1 0 1 2n3+1 r3.4 0 0 1 0 0 0",
    "1 1 0 r3.4 2n4+1 0 0 0 1 0 0",
    "1 0 0 0 0 2n5+1 1 0 0 1 1",
    "1 0 0 0 0 1 2n6+1 0 0 1 1",
    "1 0 1 1 0 0 0 2n7+1 0 0 0",
    "1 1 0 0 1 0 0 0 2n8+1 0 0",
    "1 0 0 0 0 1 1 0 0 2n9+1 1",
    "1 0 0 0 0 1 1 0 0 1 2n10+1",
};
const Table kTwoB = {
    "1 1 1 1 1 1 1 1 1 1",
    "0 0 0 0 1 1 1 1 1 1",
    "0 0 0 1 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 1 1 1 1 1 1",
    "1-r5.11 1 1 0 0 0 0 0 0 0",
    "1-r6.11 1 1-r6.13 0 0 0 0 0 -r6.19 0",
    "0 0 0 1 -r7.15 0 0 0 -r7.19 0",
    "0 -r8.12 0 0 1 1 1 1 1 1",
    "1 1-r9.12 1 -r9.14 0 0 0 0 0 -r9.20",
    "1 1 1 0 0 -r10.16 0 0 0 -r10.20",
};
const Table kTwoC = {
    "2n11+1 1 1 0 0 0 0 0 0 0",
    "1 2n12+1 1 0 0 0 0 0 0 0",
    "1 1 2n13+1 0 0 0 0 0 0 0",
    "0 0 0 2n14+1 0 0 0 0 0 0",
    "0 0 0 0 2n15+1 0 -r15.17 0 0 0",
    "0 0 0 0 0 2n16+1 0 -r16.18 0 0",
    "0 0 0 0 -r15.17 0 2n17+1 0 0 0",
    "0 0 0 0 0 -r16.18 0 2n18+1 0 0",
    "0 0 0 0 0 0 0 0 2n19+1 0",
    "0 0 0 0 0 0 0 0 0 2n20+1",
};

Table join_blocks(const Table& a, const Table& b, const Table& c) {
  // [[A, B], [B^T, C]]
  std::vector<std::vector<std::string>> rows;
  auto split = [](const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;) out.push_back(tok);
    return out;
  };
  std::vector<std::vector<std::string>> bt;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto row = split(a[i]);
    auto rb = split(b[i]);
    row.insert(row.end(), rb.begin(), rb.end());
    rows.push_back(row);
    bt.push_back(rb);
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t k = 0; k < bt.size(); ++k) row.push_back(bt[k][i]);
    auto rc = split(c[i]);
    row.insert(row.end(), rc.begin(), rc.end());
    rows.push_back(row);
  }
  Table out;
  for (const auto& r : rows) {
    std::string line;
    for (const auto& t : r) line += (line.empty() ? "" : " ") + t;
    out.push_back(line);
  }
  return out;
}

const std::vector<CaseDef>& case_defs() {
  static const std::vector<CaseDef> defs = [] {
    std::vector<int> zero20(20, 0), two20(20, 2);
    return std::vector<CaseDef>{
        {CaseId::LemmaCase1, "LemmaCase1", {0, 0, 0}, kLemma1},
        {CaseId::LemmaCase2, "LemmaCase2", {0, 0, 2}, kLemma2},
        {CaseId::LemmaCase3, "LemmaCase3", {0, 2, 2}, kLemma3},
        {CaseId::LemmaCase4, "LemmaCase4", {2, 2, 2}, kLemma4},
        {CaseId::PropN4, "Prop_n4", {0, 0, 0, 0}, kRank5Zero},
        {CaseId::PropN20Zero, "Prop_n20_zero", zero20, join_blocks(kZeroA, kZeroB, kZeroC)},
        {CaseId::ThmCase1, "ThmCase1", {0, 0, 0, 0}, kRank5Zero},
        {CaseId::ThmCase2, "ThmCase2", {0, 0, 0, 2}, kThm2},
        {CaseId::ThmCase3, "ThmCase3", {0, 0, 2, 2}, kThm3},
        {CaseId::ThmCase4, "ThmCase4", {0, 2, 2, 2}, kThm4},
        {CaseId::ThmCase5, "ThmCase5", {2, 2, 2, 2}, kThm5},
        {CaseId::ThmN20Two, "Thm_n20_two", two20, join_blocks(kTwoA, kTwoB, kTwoC)},
    };
  }();
  return defs;
}

const CaseDef& case_def(CaseId id) {
  for (const auto& d : case_defs())
    if (d.id == id) return d;
  throw std::invalid_argument("case " + std::string(to_string(id)) + " has no fixed recipe");
}

std::optional<std::int64_t> perfect_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  BigInt v = n;
  if (!mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
  BigInt r = sqrt(v);
  return r.get_si();
}

std::int64_t param_at(std::span<const std::int64_t> params, std::size_t oneBased) {
  if (oneBased == 0 || oneBased > params.size())
    throw std::logic_error("Gram table refers to parameter n" + std::to_string(oneBased));
  return params[oneBased - 1];
}

BigInt eval_token(const std::string& tok, std::span<const std::int64_t> params) {
  BigInt total = 0;
  std::size_t i = 0;
  auto read_uint = [&]() {
    std::size_t start = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (start == i) throw std::logic_error("malformed Gram token " + tok);
    return std::stol(tok.substr(start, i - start));
  };
  while (i < tok.size()) {
    int sign = 1;
    if (tok[i] == '+' || tok[i] == '-') {
      sign = tok[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i < tok.size() && tok[i] == 'r') {
      ++i;
      auto a = static_cast<std::size_t>(read_uint());
      if (i >= tok.size() || tok[i] != '.') throw std::logic_error("malformed Gram token " + tok);
      ++i;
      auto b = static_cast<std::size_t>(read_uint());
      BigInt prod = BigInt(param_at(params, a)) * param_at(params, b);
      if (!mpz_perfect_square_p(prod.get_mpz_t()))
        throw std::invalid_argument("sqrt(n" + std::to_string(a) + " n" + std::to_string(b) +
                                    ") is not an integer");
      total += sign * BigInt(sqrt(prod));
      continue;
    }
    long k = read_uint();
    if (i < tok.size() && tok[i] == 'n') {
      ++i;
      auto idx = static_cast<std::size_t>(read_uint());
      total += sign * (BigInt(k) * param_at(params, idx));
    } else {
      total += sign * BigInt(k);
    }
  }
  return total;
}

IntMatrix eval_table(const Table& table, std::span<const std::int64_t> params) {
  const std::size_t n = table.size();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::istringstream is(table[i]);
    std::size_t j = 0;
    for (std::string tok; is >> tok; ++j) {
      if (j >= n) throw std::logic_error("Gram table row too long");
      g(i, j) = eval_token(tok, params);
    }
    if (j != n) throw std::logic_error("Gram table row too short");
  }
  if (!g.is_symmetric()) throw std::logic_error("Gram table is not symmetric");
  return g;
}

std::vector<SlotKind> case_kinds(std::size_t count) {
  std::vector<SlotKind> kinds = {u_slot(1), u_slot(2)};
  const auto& pool = scaled_slot_pool();
  for (std::size_t i = 0; kinds.size() < count; ++i) kinds.push_back(pool.at(i));
  return kinds;
}

void validate_slot(const SlotSpec& s, std::size_t index) {
  const std::string where = "n" + std::to_string(index + 1) + " = " + std::to_string(s.n);
  if (s.residue != 0 && s.residue != 2) throw std::invalid_argument(where + ": residue must be 0 or 2");
  if (s.kind.family == SlotFamily::U) {
    const std::int64_t least = s.residue == 0 ? 2 : 1;
    if (s.n < least)
      throw std::invalid_argument(where + ": must be at least " + std::to_string(least));
    return;
  }
  auto m = perfect_sqrt(s.n);
  if (!m || *m < 2) throw std::invalid_argument(where + ": must be a perfect square of some m >= 2");
}

}  // namespace

std::string_view to_string(CaseId id) {
  if (id == CaseId::Generic) return "Generic";
  for (const auto& d : case_defs())
    if (d.id == id) return d.name;
  return "?";
}

CaseId case_from_string(std::string_view name) {
  if (name == "Generic") return CaseId::Generic;
  for (const auto& d : case_defs())
    if (d.name == name) return d.id;
  throw std::invalid_argument("unknown case '" + std::string(name) + "'");
}

std::string to_string(const SlotKind& kind) {
  switch (kind.family) {
    case SlotFamily::U:
      return "U" + std::to_string(kind.copy);
    case SlotFamily::A2:
      return "A2_" + std::to_string(kind.copy);
    case SlotFamily::E8:
      return "E8_" + std::to_string(kind.copy) + "(" + std::to_string(kind.root) + ")";
  }
  return "?";
}

AmbientVector slot_base(const SlotKind& kind) {
  switch (kind.family) {
    case SlotFamily::U:
      return AmbientVector::hyperbolic(kind.copy, 1);
    case SlotFamily::A2:
      if (kind.copy == 1) return AmbientVector::a1();
      if (kind.copy == 2) return AmbientVector::a2();
      break;
    case SlotFamily::E8:
      return AmbientVector::e8_root(kind.copy, kind.root);
  }
  throw std::invalid_argument("slot_base: bad slot " + to_string(kind));
}

std::int64_t SlotSpec::scale() const {
  if (kind.family == SlotFamily::U) return 1;
  auto m = perfect_sqrt(n);
  if (!m) throw std::invalid_argument("slot " + to_string(kind) + ": n = " + std::to_string(n) + " is not a square");
  return *m;
}

AmbientVector SlotSpec::generator() const {
  AmbientVector v;
  if (kind.family == SlotFamily::U)
    v = AmbientVector::hyperbolic(kind.copy, 1) + BigInt(n) * AmbientVector::hyperbolic(kind.copy, 2);
  else
    v = BigInt(scale()) * slot_base(kind);
  if (perturbation) v += *perturbation;
  return v;
}

const std::vector<SlotKind>& scaled_slot_pool() {
  static const std::vector<SlotKind> pool = {
      a2_slot(1),     a2_slot(2),     e8_slot(1, 1), e8_slot(1, 3), e8_slot(1, 6), e8_slot(2, 1),
      e8_slot(2, 3),  e8_slot(2, 6),  e8_slot(1, 2), e8_slot(2, 2), e8_slot(1, 4), e8_slot(2, 4),
      e8_slot(1, 7),  e8_slot(2, 7),  e8_slot(1, 8), e8_slot(2, 8), e8_slot(1, 5), e8_slot(2, 5),
  };
  return pool;
}

std::string_view to_string(RealizationStatus s) {
  switch (s) {
    case RealizationStatus::RealizedStrict:
      return "REALIZED_STRICT";
    case RealizationStatus::RealizedGoal:
      return "REALIZED_GOAL";
    case RealizationStatus::NotRealizable:
      return "NOT_REALIZABLE";
  }
  return "?";
}

std::size_t case_arity(CaseId id) { return case_def(id).residues.size(); }

Recipe make_recipe(CaseId id, std::span<const std::int64_t> params) {
  const CaseDef& def = case_def(id);
  if (params.size() != def.residues.size())
    throw std::invalid_argument(std::string(def.name) + " takes " + std::to_string(def.residues.size()) +
                                " parameters, got " + std::to_string(params.size()));
  Recipe r;
  r.caseId = id;
  const auto kinds = case_kinds(def.residues.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    SlotSpec s{kinds[i], params[i], def.residues[i], std::nullopt};
    validate_slot(s, i);
    r.slots.push_back(s);
  }
  r.targetGram = eval_table(def.gram, params);
  return r;
}

IntMatrix paper_gram(CaseId id, std::span<const std::int64_t> params) { return *make_recipe(id, params).targetGram; }

std::vector<AmbientVector> perturbation_candidates(const SlotSpec& slot, int bound) {
  if (bound < 1) throw std::invalid_argument("search bound must be at least 1");
  const AmbientVector base = slot.kind.family == SlotFamily::U ? AmbientVector{} : slot_base(slot.kind);
  const BigInt m = slot.kind.family == SlotFamily::U ? BigInt(0) : BigInt(slot.scale());
  std::vector<AmbientVector> out;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) {
      const long z = 1 - x - y;
      if (z < -bound || z > bound) continue;
      AmbientVector p = AmbientVector::i3(x, y, z);
      // Norm equation: 2m (base.p) + p.p = 1.
      if (2 * m * inner_product(base, p) + norm(p) != 1) continue;
      out.push_back(p);
    }
  std::sort(out.begin(), out.end(), [](const AmbientVector& a, const AmbientVector& b) {
    const BigInt na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    return b < a;
  });
  return out;
}

std::vector<AmbientVector> assemble_basis(std::span<const SlotSpec> slots) {
  std::vector<AmbientVector> basis{AmbientVector::h_squared()};
  for (const auto& s : slots) basis.push_back(s.generator());
  return basis;
}

std::vector<SlotSpec> generic_slots(std::span<const std::int64_t> targets) {
  if (targets.size() < 2 || targets.size() > 20)
    throw std::invalid_argument("need between 2 and 20 targets, got " + std::to_string(targets.size()));
  std::vector<SlotSpec> slots;
  const auto kinds = case_kinds(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::int64_t d = targets[i];
    const std::string who = "d = " + std::to_string(d) + " (target " + std::to_string(i + 1) + ")";
    const bool star = satisfies_star(d);
    const bool doubleStar = i < 2 || satisfies_double_star(d);
    if (!star || !doubleStar) {
      std::string rules;
      if (!star) rules += " fails (*): need d >= 8 and d = 0, 2 mod 6";
      if (!doubleStar) rules += std::string(star ? "" : ";") + " fails (**): need d = 6m^2 or 6m^2 + 2 with m >= 2";
      throw std::invalid_argument(who + rules);
    }
    const int residue = static_cast<int>(d % 6);
    slots.push_back(SlotSpec{kinds[i], (d - residue) / 6, residue, std::nullopt});
    validate_slot(slots.back(), i);
  }
  return slots;
}

IntMatrix generic_target_gram(std::span<const SlotSpec> slots) {
  std::vector<SlotSpec> bare(slots.begin(), slots.end());
  for (auto& s : bare) s.perturbation.reset();
  IntMatrix g = gram_of(assemble_basis(bare));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].residue != 2) continue;
    g(0, i + 1) = g(i + 1, 0) = 1;
    g(i + 1, i + 1) += 1;
  }
  return g;
}

RealizationOutcome build(CaseId id, std::span<const std::int64_t> params, BuildMode mode,
                         std::optional<int> searchBound) {
  Recipe r = make_recipe(id, params);
  const int bound = searchBound.value_or(default_search_bound(mode));
  if (mode == BuildMode::Strict) return realize_perturbations(std::move(r.slots), *r.targetGram, bound);
  return realize_goal(std::move(r.slots), bound);
}

RealizationOutcome build_generic(std::span<const std::int64_t> targets, BuildMode mode,
                                 std::optional<int> searchBound) {
  auto slots = generic_slots(targets);
  const int bound = searchBound.value_or(default_search_bound(mode));
  if (mode == BuildMode::Strict) {
    IntMatrix target = generic_target_gram(slots);
    return realize_perturbations(std::move(slots), target, bound);
  }
  return realize_goal(std::move(slots), bound);
}

}  // namespace hassett
