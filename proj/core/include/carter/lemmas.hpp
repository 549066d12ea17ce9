#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carter/carter.hpp"

namespace carter {

/// Whether the image of H in G/N is a Carter subgroup there. The caller is
/// responsible for condition (*) on G. Throws NotNormal, NotCarter.
bool verify_quotient_image(FiniteGroup const& g, SubgroupHandle const& h,
                           SubgroupHandle const& n);

struct Lemma5Report {
  bool overgroups_self_normalizing = true;
  bool conjugates_in_ZK = true;
  bool center_meeting_other_carter = true;
  bool power_conjugacy = true;

  // The statement reads "Z(G)" where the argument uses Z(K); both readings
  // are evaluated and the first one decides conjugates_in_ZK.
  bool conjugates_in_ZG = true;
  bool readings_differ = false;

  bool overgroups_complete = true;
  std::size_t overgroups_checked = 0;  // overgroups satisfying (*)
  std::size_t overgroups_skipped = 0;  // overgroups failing (*)
  std::uint64_t class_size = 0;        // size of the G-class of z

  bool all() const {
    return overgroups_self_normalizing && conjugates_in_ZK &&
           center_meeting_other_carter && power_conjugacy;
  }
};

/// Checks the conclusions for a Carter subgroup K and z in Z(K), z != 1.
/// Throws NotCarter, NotCentral, StarFails (C_G(z) fails condition (*)).
Lemma5Report verify_lemma5(FiniteGroup const& g, SubgroupHandle const& k,
                           Permutation const& z, Limits const& limits = {});

struct QuotientImageCheck {
  std::size_t carter_index = 0;  // class in the Carter report
  SubgroupHandle normal;
  bool holds = false;
};

/// verify_quotient_image over every Carter class and every normal subgroup.
/// Skipped (star = false, no checks) when G fails condition (*).
struct Lemma1Report {
  bool star = true;
  std::vector<QuotientImageCheck> checks;
  std::size_t failures = 0;
};

Lemma1Report run_lemma1(FiniteGroup const& g, Limits const& limits = {});

struct Lemma5Run {
  std::size_t carter_index = 0;
  Permutation z;
  std::optional<Lemma5Report> report;
  std::string skipped;  // error text when a precondition fails
};

/// verify_lemma5 for every Carter class and every non-trivial z in Z(K).
struct Lemma5Summary {
  std::vector<Lemma5Run> runs;
  std::size_t failures = 0;
};

Lemma5Summary run_lemma5(FiniteGroup const& g, Limits const& limits = {});

}  // namespace carter
