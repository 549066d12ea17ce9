#include "carter/sections.hpp"

#include <memory>

#include "carter/error.hpp"
#include "carter/kernel.hpp"

namespace carter {

namespace {

// Conjugation action on the cosets Bx != B of B in A. Coset 0 is B; the
// others are numbered by their least element and shifted down by one.
struct CosetConjugation {
  FiniteGroup top;
  std::vector<Permutation> representatives;  // excluding B itself
  std::vector<std::uint32_t> coset_of;        // rank in top -> coset id

  CosetConjugation(FiniteGroup const& a, FiniteGroup const& b) : top(a) {
    auto const& index = a.elements();
    auto const& sub = b.elements();
    constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
    coset_of.assign(index.size(), kUnassigned);
    std::uint32_t next = 0;
    for (ElementIndex::Rank r = 0; r < index.size(); ++r) {
      if (coset_of[r] != kUnassigned) continue;
      if (next > 0) representatives.push_back(index[r]);
      for (auto const& x : sub.elements()) coset_of[index.rank(x * index[r])] = next;
      ++next;
    }
  }

  Permutation act(Permutation const& h) const {
    auto const& index = top.elements();
    std::vector<Point> images(representatives.size());
    for (std::size_t i = 0; i < representatives.size(); ++i) {
      images[i] = coset_of[index.rank(representatives[i].conjugate_by(h))] - 1;
    }
    return Permutation(std::move(images));
  }
};

void require_normal(FiniteGroup const& outer, FiniteGroup const& inner,
                    char const* what) {
  if (!outer.contains(inner) || !normalizes(outer, inner)) {
    fail(ErrorCode::NotNormal, what);
  }
}

}  // namespace

FiniteGroup SectionMap::image_of(FiniteGroup const& x) const {
  std::vector<Permutation> images;
  for (auto const& s : x.generators()) images.push_back(apply(s));
  return FiniteGroup(image_group.degree(), images);
}

SectionMap quotient(FiniteGroup const& g, SubgroupHandle const& n) {
  require_normal(g, n.group(), "quotient: N is not normal in G");
  auto action = std::make_shared<CosetAction>(coset_action(g, n.group()));
  SectionMap section;
  section.source = SubgroupHandle::whole(g);
  section.section_top = SubgroupHandle::whole(g);
  section.section_bottom = SubgroupHandle(g, n.group());
  section.image_group = action->image;
  section.map = action->generator_images;
  section.kernel = SubgroupHandle(g, n.group());
  section.apply = [action](Permutation const& x) { return action->act(x); };
  return section;
}

SubgroupHandle section_normalizer(SubgroupHandle const& h,
                                  SubgroupHandle const& a,
                                  SubgroupHandle const& b) {
  require_normal(a.group(), b.group(), "section: B is not normal in A");
  FiniteGroup const& hg = h.group();
  auto const na = normalizer_of(hg, a.group());
  auto const nab = normalizer_of(na.group(), b.group());
  return SubgroupHandle(h.parent(), nab.group());
}

SectionMap induced_on_section(SubgroupHandle const& h, SubgroupHandle const& a,
                              SubgroupHandle const& b, std::uint64_t cap) {
  require_normal(a.group(), b.group(), "section: B is not normal in A");
  std::uint64_t const size = a.order() / b.order();
  if (size > cap) {
    fail(ErrorCode::GroupTooLarge, "section of order " + std::to_string(size) +
                                       " exceeds the element-action limit " +
                                       std::to_string(cap));
  }
  auto action = std::make_shared<CosetConjugation>(a.group(), b.group());
  std::size_t const degree = action->representatives.size();
  // Z(A/B) = 1 iff no non-trivial coset is fixed by every generator of A.
  std::vector<bool> central(degree, true);
  for (auto const& s : a.generators()) {
    auto const image = action->act(s);
    for (std::size_t i = 0; i < degree; ++i) {
      if (image[static_cast<Point>(i)] != i) central[i] = false;
    }
  }
  for (bool c : central) {
    if (c) fail(ErrorCode::NontrivialCenter, "the section has a non-trivial center");
  }

  SectionMap section;
  section.source = section_normalizer(h, a, b);
  section.section_top = a;
  section.section_bottom = b;
  for (auto const& s : section.source.generators()) {
    section.map.push_back(action->act(s));
  }
  section.image_group = FiniteGroup(degree, section.map);
  // C_H(A/B): elements h with [a, h] in B for every generator a of A.
  FiniteGroup const& src = section.source.group();
  FiniteGroup kernel(src.degree(), {});
  for (auto const& x : src.elements().elements()) {
    if (kernel.contains(x)) continue;
    bool trivial = true;
    for (auto const& s : a.generators()) {
      if (!b.contains(s.inverse() * s.conjugate_by(x))) {
        trivial = false;
        break;
      }
    }
    if (trivial) {
      auto gens = kernel.generators();
      gens.push_back(x);
      kernel = FiniteGroup(src.degree(), gens);
    }
  }
  section.kernel = SubgroupHandle(h.parent(), kernel);
  section.apply = [action](Permutation const& x) { return action->act(x); };
  return section;
}

SectionMap induced_automorphisms(SubgroupHandle const& h, SubgroupHandle const& s,
                                 std::uint64_t cap) {
  return induced_on_section(h, s, SubgroupHandle::trivial(s.parent()), cap);
}

FiniteGroup group_with_induced(SubgroupHandle const& h, SubgroupHandle const& a,
                               SubgroupHandle const& b, std::uint64_t cap) {
  auto const section = induced_on_section(h, a, b, cap);
  auto gens = section.map;
  for (auto const& s : a.generators()) gens.push_back(section.apply(s));
  return FiniteGroup(section.image_group.degree(), gens);
}

FiniteGroup group_with_induced(SubgroupHandle const& h, SubgroupHandle const& s,
                               std::uint64_t cap) {
  return group_with_induced(h, s, SubgroupHandle::trivial(s.parent()), cap);
}

}  // namespace carter
