#include "carter/wreath.hpp"

#include <algorithm>
#include <set>

#include "carter/error.hpp"
#include "carter/families.hpp"
#include "carter/kernel.hpp"

namespace carter {

namespace {

using Block = std::vector<std::size_t>;

// j with T_i^x = T_j, for each i. One non-trivial generator per factor
// suffices because distinct factors meet trivially.
std::vector<std::size_t> factor_images(std::vector<SubgroupHandle> const& factors,
                                       Permutation const& x) {
  std::vector<std::size_t> images(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto const t = factors[i].generators().front().conjugate_by(x);
    auto it = std::find_if(factors.begin(), factors.end(),
                           [&](SubgroupHandle const& f) { return f.contains(t); });
    if (it == factors.end()) {
      fail(ErrorCode::HypothesisViolated, "G does not permute the factors of B");
    }
    images[i] = static_cast<std::size_t>(it - factors.begin());
  }
  return images;
}

// The orbit of `block` under the generator images, or nothing when the
// translates overlap without coinciding.
std::optional<std::vector<Block>> block_orbit(
    Block const& block, std::vector<std::vector<std::size_t>> const& gens) {
  std::set<Block> orbit{block};
  std::vector<Block> queue{block};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const& g : gens) {
      Block image;
      for (std::size_t x : queue[i]) image.push_back(g[x]);
      std::sort(image.begin(), image.end());
      if (orbit.insert(image).second) queue.push_back(std::move(image));
    }
  }
  std::vector<bool> used(gens.empty() ? block.size() : gens.front().size(), false);
  for (auto const& b : queue) {
    for (std::size_t x : b) {
      if (used[x]) return std::nullopt;
      used[x] = true;
    }
  }
  return queue;
}

bool subset_of(Block const& a, Block const& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FiniteGroup join_groups(std::size_t degree, std::vector<FiniteGroup const*> parts) {
  std::vector<Permutation> gens;
  for (auto const* p : parts) {
    gens.insert(gens.end(), p->generators().begin(), p->generators().end());
  }
  return FiniteGroup(degree, gens);
}

FiniteGroup conjugate_group(FiniteGroup const& x, Permutation const& by) {
  std::vector<Permutation> gens;
  for (auto const& s : x.generators()) gens.push_back(s.conjugate_by(by));
  return FiniteGroup(x.degree(), gens);
}

bool is_prime(std::uint64_t n) {
  std::uint64_t p = 0;
  return n > 1 && is_prime_power(n, &p) && p == n;
}

void check_hypotheses(FiniteGroup const& g, SubgroupHandle const& h,
                      SubgroupHandle const& b) {
  if (!is_carter(g, h)) fail(ErrorCode::NotCarter, "H is not a Carter subgroup of G");
  if (!g.contains(b.group()) || !normalizes(g, b.group())) {
    fail(ErrorCode::HypothesisViolated, "B is not normal in G");
  }
  auto const meet = intersection(h.group(), b.group());
  if (h.order() / meet.order() * b.order() != g.order()) {
    fail(ErrorCode::HypothesisViolated, "G is not the product HB");
  }
}

}  // namespace

Permutation WreathEmbedding::eta(Permutation const& x) const {
  auto const top = phi.apply(x);
  std::size_t const d = a.degree();
  std::vector<Point> images(p * d);
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t const j = top[static_cast<Point>(i)];
    auto const coordinate = xi.apply(transversal[i] * x * transversal[j].inverse());
    for (std::size_t alpha = 0; alpha < d; ++alpha) {
      images[i * d + alpha] =
          static_cast<Point>(j * d + coordinate[static_cast<Point>(alpha)]);
    }
  }
  return Permutation(std::move(images));
}

Permutation WreathEmbedding::psi(std::size_t i, Permutation const& y) const {
  return xi.apply(transversal[i] * y * transversal[i].inverse());
}

WreathEmbedding build_wreath_embedding(FiniteGroup const& g, SubgroupHandle const& h,
                                       SubgroupHandle const& b,
                                       Limits const& limits) {
  check_hypotheses(g, h, b);
  WreathEmbedding e;
  e.g = g;
  e.h = h;
  e.b = b;
  e.factors = simple_direct_factors(b);
  std::size_t const k = e.factors.size();
  if (k == 1) fail(ErrorCode::NoBlockSystem, "B is simple: there is nothing to embed");
  if (!centralizer_of(g, b.group()).group().is_trivial()) {
    fail(ErrorCode::CentralizerNotTrivial, "C_G(B) is not trivial");
  }

  std::vector<std::vector<std::size_t>> omega;
  for (auto const& s : g.generators()) omega.push_back(factor_images(e.factors, s));
  {
    std::vector<bool> reached(k, false);
    std::vector<std::size_t> queue{0};
    reached[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& s : omega) {
        if (!reached[s[queue[i]]]) {
          reached[s[queue[i]]] = true;
          queue.push_back(s[queue[i]]);
        }
      }
    }
    if (queue.size() != k) fail(ErrorCode::NotTransitive, "G is not transitive on the factors");
  }

  // Blocks through factor 0; the maximal ones give primitive actions.
  constexpr std::size_t kMaxFactors = 20;
  if (k > kMaxFactors) fail(ErrorCode::GroupTooLarge, "too many direct factors");
  std::vector<std::pair<Block, std::vector<Block>>> systems;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
    Block block{0};
    for (std::size_t i = 1; i < k; ++i) {
      if (mask >> (i - 1) & 1) block.push_back(i);
    }
    if (block.size() == k || k % block.size() != 0) continue;
    if (auto orbit = block_orbit(block, omega)) systems.emplace_back(block, *orbit);
  }
  std::vector<std::pair<Block, std::vector<Block>>> candidates;
  for (auto const& [block, orbit] : systems) {
    bool maximal = std::none_of(systems.begin(), systems.end(), [&](auto const& other) {
      return other.first.size() > block.size() && subset_of(block, other.first);
    });
    if (!maximal || !is_prime(orbit.size())) continue;
    // The block action must be cyclic of order p, i.e. regular.
    std::vector<Permutation> gens;
    for (auto const& s : omega) {
      std::vector<Point> images(orbit.size());
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        auto const target = s[orbit[i].front()];
        for (std::size_t j = 0; j < orbit.size(); ++j) {
          if (std::binary_search(orbit[j].begin(), orbit[j].end(), target)) {
            images[i] = static_cast<Point>(j);
          }
        }
      }
      gens.emplace_back(std::move(images));
    }
    if (FiniteGroup(orbit.size(), gens).order() == orbit.size()) {
      candidates.emplace_back(block, orbit);
    }
  }
  if (candidates.empty()) {
    fail(ErrorCode::HypothesisViolated,
         "no primitive block system on which G acts as a cyclic group of prime order");
  }
  std::sort(candidates.begin(), candidates.end());
  Block const first = candidates.front().first;
  e.p = candidates.front().second.size();
  e.l = first.size();

  auto stabilizes_first = [&](Permutation const& x) {
    return std::binary_search(first.begin(), first.end(),
                              factor_images(e.factors, x)[0]);
  };
  FiniteGroup y = b.group();
  for (auto const& x : g.elements().elements()) {
    if (y.contains(x) || !stabilizes_first(x)) continue;
    auto gens = y.generators();
    gens.push_back(x);
    y = FiniteGroup(g.degree(), gens);
  }
  e.y = SubgroupHandle(g, y);

  for (auto const& x : h.group().elements().elements()) {
    if (!y.contains(x)) {
      e.h_element = x;
      break;
    }
  }

  // Delta_{i+1} = Delta_1^{h^i}, so that h acts as (1 2 ... p).
  std::vector<std::size_t> block_of(k);
  Permutation power = g.identity();
  for (std::size_t i = 0; i < e.p; ++i) {
    auto const images = factor_images(e.factors, power);
    Block block;
    for (std::size_t t : first) block.push_back(images[t]);
    std::sort(block.begin(), block.end());
    for (std::size_t t : block) block_of[t] = i;
    e.blocks.push_back(std::move(block));
    power = power * e.h_element;
  }
  auto block_action = [factors = e.factors, blocks = e.blocks,
                       block_of](Permutation const& x) {
    auto const images = factor_images(factors, x);
    std::vector<Point> result(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      result[i] = static_cast<Point>(block_of[images[blocks[i].front()]]);
    }
    return Permutation(std::move(result));
  };
  e.phi.source = SubgroupHandle::whole(g);
  e.phi.section_top = SubgroupHandle::whole(g);
  e.phi.section_bottom = e.y;
  for (auto const& s : g.generators()) e.phi.map.push_back(block_action(s));
  e.phi.image_group = FiniteGroup(e.p, e.phi.map);
  e.phi.kernel = e.y;
  e.phi.apply = block_action;

  for (auto const& block : e.blocks) {
    std::vector<FiniteGroup const*> parts;
    for (std::size_t t : block) parts.push_back(&e.factors[t].group());
    e.s_list.emplace_back(g, join_groups(g.degree(), parts));
  }

  e.transversal.assign(e.p, g.identity());
  std::vector<bool> found(e.p, false);
  found[0] = true;
  std::size_t missing = e.p - 1;
  for (auto const& x : g.elements().elements()) {
    if (missing == 0) break;
    std::size_t const i = block_action(x)[0];
    if (!found[i]) {
      found[i] = true;
      e.transversal[i] = x;
      --missing;
    }
  }

  e.xi = induced_automorphisms(e.y, e.s_list[0], limits.element_action);
  e.a = e.xi.image_group;
  e.wreath = wreath_product(e.a, cyclic_group(e.p));
  for (auto const& s : g.generators()) e.eta_images.push_back(e.eta(s));
  e.eta_image = FiniteGroup(e.p * e.a.degree(), e.eta_images);

  auto const hy = intersection(h.group(), y);
  for (std::size_t i = 0; i < e.p; ++i) {
    std::vector<Permutation> gens;
    for (auto const& s : hy.generators()) gens.push_back(e.psi(i, s));
    e.h_list.emplace_back(e.a.degree(), gens);
    std::size_t const next = (i + 1) % e.p;
    e.a_list.push_back(
        e.xi.apply(e.transversal[i] * e.h_element * e.transversal[next].inverse()));
  }

  std::size_t const d = e.a.degree();
  std::vector<Permutation> base;
  for (std::size_t i = 0; i < e.p; ++i) {
    for (auto const& s : e.h_list[i].generators()) {
      std::vector<Point> images(e.p * d);
      for (std::size_t x = 0; x < images.size(); ++x) images[x] = static_cast<Point>(x);
      for (std::size_t alpha = 0; alpha < d; ++alpha) {
        images[i * d + alpha] = static_cast<Point>(i * d + s[static_cast<Point>(alpha)]);
      }
      base.emplace_back(std::move(images));
    }
  }
  std::vector<Permutation> y_eta;
  for (auto const& s : y.generators()) y_eta.push_back(e.eta(s));
  e.n = intersection(FiniteGroup(e.p * d, base), FiniteGroup(e.p * d, y_eta)).group();
  return e;
}

EmbeddingInvariants check_invariants(WreathEmbedding const& e) {
  EmbeddingInvariants inv;
  std::size_t const p = e.p, d = e.a.degree();
  inv.phi_cyclic_prime = is_prime(p) && e.phi.image_group.order() == p;

  bool multiplicative = true;
  auto const& gens = e.g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (e.eta(gens[i] * gens[j]) != e.eta_images[i] * e.eta_images[j]) {
        multiplicative = false;
      }
    }
  }
  inv.eta_injective = multiplicative && e.eta_image.order() == e.g.order() &&
                      centralizer_of(e.g, e.b.group()).group().is_trivial();
  inv.eta_in_wreath = e.wreath.contains(e.eta_image);

  auto const s = e.xi.image_of(e.s_list[0].group());
  inv.b_block_form = true;
  for (auto const& x : e.b.generators()) {
    auto const image = e.eta(x);
    for (std::size_t pt = 0; pt < p * d; ++pt) {
      if (image[static_cast<Point>(pt)] / d != pt / d) inv.b_block_form = false;
    }
  }
  inv.y_projects_onto_a = true;
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Permutation> bi, yi;
    for (auto const& x : e.b.generators()) bi.push_back(e.psi(i, x));
    for (auto const& x : e.y.generators()) yi.push_back(e.psi(i, x));
    if (!(FiniteGroup(d, bi) == s)) inv.b_block_form = false;
    if (!(FiniteGroup(d, yi) == e.a)) inv.y_projects_onto_a = false;
  }

  auto const top = e.phi.apply(e.h_element).cycles();
  inv.h_top_p_cycle = top.size() == 1 && top.front().size() == p &&
                      e.y.contains(e.h_element.pow(static_cast<std::int64_t>(p)));

  inv.h_i_conjugate = true;
  Permutation running(d);
  for (std::size_t i = 1; i < p; ++i) {
    running = running * e.a_list[i - 1];
    if (!(e.h_list[i] == conjugate_group(e.h_list[0], running))) {
      inv.h_i_conjugate = false;
    }
  }

  inv.n_normalized_by_h = true;
  for (auto const& x : e.h.generators()) {
    auto const image = e.eta(x);
    for (auto const& m : e.n.generators()) {
      if (!e.n.contains(m.conjugate_by(image))) inv.n_normalized_by_h = false;
    }
  }
  return inv;
}

Lemma3Report verify_lemma3(FiniteGroup const& g, SubgroupHandle const& h,
                           SubgroupHandle const& b, Limits const& limits) {
  check_hypotheses(g, h, b);
  auto const factors = simple_direct_factors(b);
  Lemma3Report report;
  report.k = factors.size();
  auto const& t1 = factors.front();
  auto const aut_h = induced_automorphisms(h, t1, limits.element_action).image_group;
  auto const induced = group_with_induced(h, t1, limits.element_action);
  report.aut_h_order = aut_h.order();
  report.induced_order = induced.order();
  report.claim = is_carter(induced, SubgroupHandle(induced, aut_h));
  if (report.k == 1) {
    report.h1_carter = report.bridge = report.invariants = true;
    return report;
  }

  auto const e = build_wreath_embedding(g, h, b, limits);
  report.p = e.p;
  report.invariants = check_invariants(e).all();
  report.h1_carter = is_carter(e.a, SubgroupHandle(e.a, e.h_list.front()));

  // H_1 acts on S_1 \ {1}; restrict the elements fixing T_1 setwise to the
  // points of T_1 \ {1}. Both point sets follow the element order.
  auto const& s1 = e.s_list.front().group().elements();
  auto const& t = t1.group().elements();
  std::size_t const d = e.a.degree();
  std::vector<Point> to_s(t.size() - 1);
  std::vector<std::int64_t> to_t(d, -1);
  for (ElementIndex::Rank r = 1; r < t.size(); ++r) {
    auto const q = s1.rank(t[r]) - 1;
    to_s[r - 1] = q;
    to_t[q] = static_cast<std::int64_t>(r - 1);
  }
  FiniteGroup restricted(t.size() - 1, {});
  for (auto const& x : e.h_list.front().elements().elements()) {
    std::vector<Point> images(to_s.size());
    bool stable = true;
    for (std::size_t j = 0; j < to_s.size() && stable; ++j) {
      auto const target = to_t[x[to_s[j]]];
      stable = target >= 0;
      if (stable) images[j] = static_cast<Point>(target);
    }
    if (!stable) continue;
    Permutation r(std::move(images));
    if (restricted.contains(r)) continue;
    auto gens = restricted.generators();
    gens.push_back(std::move(r));
    restricted = FiniteGroup(t.size() - 1, gens);
  }
  report.bridge = restricted == aut_h;
  return report;
}

Lemma3Summary run_lemma3(FiniteGroup const& g, Limits const& limits) {
  Lemma3Summary summary;
  for (auto const& m : minimal_normal_subgroups(g, limits.normal_subgroups)) {
    if (!is_abelian(m.group())) {
      summary.b = m;
      break;
    }
  }
  if (summary.b.order() <= 1) {
    summary.reason = "no non-abelian minimal normal subgroup";
    return summary;
  }
  auto const carter = carter_subgroups(g, limits);
  if (carter.classes.empty()) {
    summary.reason = "G has no Carter subgroup";
    return summary;
  }
  summary.applicable = true;
  for (auto const& c : carter.classes) {
    Lemma3Run run{c.representative, std::nullopt, {}};
    try {
      run.report = verify_lemma3(g, c.representative, summary.b, limits);
      auto const& r = *run.report;
      if (!(r.claim && r.h1_carter && r.bridge && r.invariants)) ++summary.failures;
    } catch (Error const& e) {
      switch (e.code()) {
        case ErrorCode::HypothesisViolated:
        case ErrorCode::CentralizerNotTrivial:
        case ErrorCode::NotTransitive:
          run.error = e.what();
          break;
        default:
          throw;
      }
    }
    summary.runs.push_back(std::move(run));
  }
  return summary;
}

}  // namespace carter
