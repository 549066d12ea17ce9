#include "carter/catalog.hpp"

#include <array>

#include "carter/error.hpp"

namespace carter {

namespace {

constexpr std::string_view kFieldPredicate =
    "if G = D_4(r^t), |(Field(G) ∩ A) : (Ĝ ∩ A)|_{2'} > 1";

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr std::array kFamilyNames{
    FamilyName{Family::alternating, "alternating"},
    FamilyName{Family::sporadic, "sporadic"},
    FamilyName{Family::A1, "A1"},
    FamilyName{Family::B, "Bl"},
    FamilyName{Family::C, "Cl"},
    FamilyName{Family::twisted_B2, "2B2"},
    FamilyName{Family::G2, "G2"},
    FamilyName{Family::F4, "F4"},
    FamilyName{Family::twisted_F4, "2F4"},
    FamilyName{Family::E7, "E7"},
    FamilyName{Family::E8, "E8"},
    FamilyName{Family::D_even, "D2l"},
    FamilyName{Family::triality_D4, "3D4"},
    FamilyName{Family::twisted_D_even, "2D2l"},
    FamilyName{Family::D_odd, "D2l+1"},
    FamilyName{Family::twisted_D_odd, "2D2l+1"},
    FamilyName{Family::twisted_G2, "2G2"},
    FamilyName{Family::E6, "E6"},
    FamilyName{Family::twisted_E6, "2E6"},
    FamilyName{Family::A, "Al"},
    FamilyName{Family::twisted_A, "2Al"},
};

std::vector<CatalogEntry> build_entries() {
  std::string const t_even = "t even if r = 3";
  std::string const field(kFieldPredicate);
  auto none = Condition::none;
  auto two = Condition::two_group_or_index_le_2;
  auto equal = Condition::A_equals_G;
  auto between = Condition::between_G_and_Ghat;
  return {
      {1, Family::alternating, "alternating", "", none, ""},
      {1, Family::sporadic, "sporadic", "", none, ""},
      {1, Family::A1, "A_1(r^t)", t_even, none, ""},
      {1, Family::B, "B_l(r^t)", t_even, none, ""},
      {1, Family::C, "C_l(r^t)", t_even, none, ""},
      {1, Family::twisted_B2, "2B_2(2^{2n+1})", "", none, ""},
      {1, Family::G2, "G_2(r^t)", "", none, ""},
      {1, Family::F4, "F_4(r^t)", "", none, ""},
      {1, Family::twisted_F4, "2F_4(2^{2n+1})", "", none, ""},
      {1, Family::E7, "E_7(r^t)", "r != 3", none, ""},
      {1, Family::E8, "E_8(r^t)", "r != 3, 5", none, ""},
      {2, Family::D_even, "D_{2l}(r^t)", t_even, two, field},
      {2, Family::triality_D4, "3D_4(r^{3t})", t_even, two, ""},
      {2, Family::twisted_D_even, "2D_{2l}(r^{2t})", t_even, two, ""},
      {3, Family::B, "B_l(3^t)", "r = 3", equal, ""},
      {3, Family::C, "C_l(3^t)", "r = 3", equal, ""},
      {3, Family::D_even, "D_{2l}(3^t)", "r = 3", equal, ""},
      {3, Family::triality_D4, "3D_4(3^{3t})", "r = 3", equal, ""},
      {3, Family::twisted_D_even, "2D_{2l}(3^{2t})", "r = 3", equal, ""},
      {3, Family::D_odd, "D_{2l+1}(r^t)", "", equal, ""},
      {3, Family::twisted_D_odd, "2D_{2l+1}(r^{2t})", "", equal, ""},
      {3, Family::twisted_G2, "2G_2(3^{2n+1})", "", equal, ""},
      {3, Family::E6, "E_6(r^t)", "", equal, ""},
      {3, Family::twisted_E6, "2E_6(r^{2t})", "", equal, ""},
      {3, Family::E7, "E_7(3^t)", "r = 3", equal, ""},
      {3, Family::E8, "E_8(3^t)", "r = 3", equal, ""},
      {3, Family::E8, "E_8(5^t)", "r = 5", equal, ""},
      {4, Family::A, "A_l(r^t)", "l > 1", between, ""},
      {4, Family::twisted_A, "2A_l(r^{2t})", "l > 1", between, ""},
  };
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Whether (l, r, t) satisfies the row's parameter constraint.
bool parameters_match(CatalogEntry const& e, FamilyParameters const& p) {
  auto const& c = e.parameter_constraints;
  if (c.empty()) return true;
  if (c == "t even if r = 3") return p.r != 3 || p.t % 2 == 0;
  if (c == "r != 3") return p.r != 3;
  if (c == "r != 3, 5") return p.r != 3 && p.r != 5;
  if (c == "r = 3") return p.r == 3;
  if (c == "r = 5") return p.r == 5;
  if (c == "l > 1") return p.l > 1;
  fail(ErrorCode::Internal, "unknown parameter constraint: " + c);
}

void validate(Family family, FamilyParameters const& p) {
  if (family == Family::alternating || family == Family::sporadic) return;
  if (!is_prime(p.r) || p.t < 1 || p.l < 1) {
    fail(ErrorCode::HypothesisViolated, "r must be prime, t and l positive");
  }
  bool const odd_power = p.t % 2 == 1;
  if ((family == Family::twisted_B2 || family == Family::twisted_F4) &&
      (p.r != 2 || !odd_power)) {
    fail(ErrorCode::HypothesisViolated, "the Suzuki and Ree families need q = 2^{2n+1}");
  }
  if (family == Family::twisted_G2 && (p.r != 3 || !odd_power)) {
    fail(ErrorCode::HypothesisViolated, "2G_2 needs q = 3^{2n+1}");
  }
}

// Evaluates a row's condition against the known facts.
Verdict evaluate(Condition c, ExtensionDescriptor const& x) {
  auto from = [](std::optional<bool> v) {
    if (!v) return Verdict::conditional;
    return *v ? Verdict::conjugate : Verdict::not_guaranteed;
  };
  switch (c) {
    case Condition::none:
      return Verdict::conjugate;
    case Condition::A_equals_G:
      return from(x.a_equals_g);
    case Condition::between_G_and_Ghat:
      if (x.a_equals_g == true) return Verdict::conjugate;
      return from(x.a_within_ghat);
    case Condition::two_group_or_index_le_2: {
      if (x.a_equals_g == true) return Verdict::conjugate;
      if (x.outer_part_is_two_group == true) return Verdict::conjugate;
      if (x.index_in_ghat && *x.index_in_ghat <= 2) return Verdict::conjugate;
      if (x.outer_part_is_two_group == false && x.index_in_ghat) {
        return Verdict::not_guaranteed;
      }
      return Verdict::conditional;
    }
  }
  return Verdict::conditional;
}

}  // namespace

std::vector<CatalogEntry> const& catalog_entries() {
  static std::vector<CatalogEntry> const entries = build_entries();
  return entries;
}

std::string_view to_string(Family f) {
  for (auto const& n : kFamilyNames) {
    if (n.family == f) return n.name;
  }
  return "unknown";
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::none: return "none";
    case Condition::two_group_or_index_le_2:
      return "A/(A ∩ Ĝ) a 2-group or |Ĝ : (A ∩ Ĝ)| <= 2";
    case Condition::A_equals_G: return "A = G";
    case Condition::between_G_and_Ghat: return "G <= A <= Ĝ";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::conjugate: return "conjugate";
    case Verdict::conditional: return "conditional";
    case Verdict::not_guaranteed: return "not_guaranteed";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto const& n : kFamilyNames) {
    if (n.name == name) return n.family;
  }
  fail(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

CatalogResult catalog_lookup(Family family, FamilyParameters const& params,
                             ExtensionDescriptor const& extension) {
  validate(family, params);
  CatalogResult best;
  best.reason = "no row matches the parameters";
  bool matched = false;
  for (auto const& e : catalog_entries()) {
    if (e.family != family || !parameters_match(e, params)) continue;
    Verdict v = evaluate(e.condition, extension);
    std::string unevaluated;
    // The D_4 predicate only constrains G = D_4(r^t), i.e. l = 2 in D_{2l}.
    if (!e.unevaluated.empty() && params.l == 2 && v != Verdict::not_guaranteed) {
      v = Verdict::conditional;
      unevaluated = e.unevaluated;
    }
    if (!matched || static_cast<int>(v) < static_cast<int>(best.verdict)) {
      matched = true;
      best.verdict = v;
      best.citation = e.row;
      best.condition = std::string(to_string(e.condition));
      best.unevaluated = unevaluated;
      best.reason = v == Verdict::conjugate      ? "condition holds"
                    : v == Verdict::conditional ? "condition not decided by the given facts"
                                                : "condition fails";
    }
  }
  return best;
}

}  // namespace carter
