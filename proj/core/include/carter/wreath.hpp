#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carter/carter.hpp"
#include "carter/sections.hpp"

namespace carter {

/// The embedding of G into A wr C_p built from a Carter subgroup H of
/// G = H(T_1 x ... x T_k). Blocks and factors are 0-indexed.
struct WreathEmbedding {
  FiniteGroup g;
  SubgroupHandle h;
  SubgroupHandle b;
  std::vector<SubgroupHandle> factors;           // T_1, ..., T_k
  std::vector<std::vector<std::size_t>> blocks;  // Delta_1, ..., Delta_p
  std::size_t p = 0;
  std::size_t l = 0;
  SectionMap phi;                   // G acting on the blocks; kernel Y
  SubgroupHandle y;
  std::vector<SubgroupHandle> s_list;  // S_i: product of the T_j in Delta_i
  Permutation h_element;             // least element of H outside Y
  std::vector<Permutation> transversal;  // x_i, with S_1^{x_i} = S_i
  SectionMap xi;                     // Y acting on S_1 \ {1}
  FiniteGroup a;                     // Y^xi
  FiniteGroup wreath;                // A wr C_p on p * deg(A) points
  std::vector<Permutation> eta_images;  // one per generator of G
  FiniteGroup eta_image;             // G^eta
  std::vector<FiniteGroup> h_list;   // H_i = (H ∩ Y)^{psi_i}
  std::vector<Permutation> a_list;   // coordinates of h^eta
  FiniteGroup n;                     // (H_1 x ... x H_p) ∩ Y^eta

  /// x^eta for any x in G.
  Permutation eta(Permutation const& x) const;
  /// The i-th coordinate of y^eta for y in Y, as a permutation of deg(A).
  Permutation psi(std::size_t i, Permutation const& y) const;
};

struct EmbeddingInvariants {
  bool phi_cyclic_prime = false;   // G^phi cyclic of prime order p
  bool eta_injective = false;      // |G^eta| = |G| and C_G(B) = 1
  bool eta_in_wreath = false;      // G^eta <= A wr C_p
  bool b_block_form = false;       // B^eta in the base, projections = S
  bool y_projects_onto_a = false;  // Y^{psi_i} = A for all i
  bool h_top_p_cycle = false;      // h^phi a p-cycle, h^p in Y
  bool h_i_conjugate = false;      // H_i = H_1^{a_1 ... a_{i-1}}
  bool n_normalized_by_h = false;

  bool all() const {
    return phi_cyclic_prime && eta_injective && eta_in_wreath && b_block_form &&
           y_projects_onto_a && h_top_p_cycle && h_i_conjugate &&
           n_normalized_by_h;
  }
};

/// Throws NotCarter, HypothesisViolated (G != HB), AbelianFactor,
/// NoBlockSystem (k = 1), CentralizerNotTrivial, NotTransitive.
WreathEmbedding build_wreath_embedding(FiniteGroup const& g, SubgroupHandle const& h,
                                       SubgroupHandle const& b,
                                       Limits const& limits = {});

EmbeddingInvariants check_invariants(WreathEmbedding const& e);

struct Lemma3Report {
  std::size_t k = 0;
  std::size_t p = 0;  // 0 when k = 1
  std::uint64_t aut_h_order = 0;
  std::uint64_t induced_order = 0;
  bool claim = false;      // Aut_H(T_1) Carter in <Aut_H(T_1), T_1>
  bool h1_carter = false;  // H_1 Carter in A; vacuous when k = 1
  bool bridge = false;     // Aut_H(T_1) = Aut_{H_1}(T_1); vacuous when k = 1
  bool invariants = false; // all embedding invariants; vacuous when k = 1
};

Lemma3Report verify_lemma3(FiniteGroup const& g, SubgroupHandle const& h,
                           SubgroupHandle const& b, Limits const& limits = {});

struct Lemma3Run {
  SubgroupHandle h;
  std::optional<Lemma3Report> report;
  std::string error;  // hypothesis failure, when report is empty
};

/// verify_lemma3 with B the first non-abelian minimal normal subgroup and H
/// each Carter class representative. `applicable` is false (with a reason)
/// when there is no such B or no Carter subgroup.
struct Lemma3Summary {
  bool applicable = false;
  std::string reason;
  SubgroupHandle b;
  std::vector<Lemma3Run> runs;
  std::size_t failures = 0;
};

Lemma3Summary run_lemma3(FiniteGroup const& g, Limits const& limits = {});

}  // namespace carter
