#pragma once

#include <map>
#include <string>
#include <vector>

#include "maslovkit/fredholm.hpp"

namespace maslovkit {

/// The moduli spaces whose virtual dimensions the calculus covers: the three
/// generic jumping-boundary shapes and the named spaces they specialize to.
enum class ModuliKind {
    Strip,
    HalfStripPlus,
    HalfStripMinus,
    PairOfPantsLambda,
    TriangleOmega,
    E,
    G,
    GE_Upsilon,
    C,
    Ev,
    IShriek,
    K_Upsilon_Omega,
    K_alpha_Lambda,
    G_K,
};

const char* to_string(ModuliKind k);
ModuliKind moduli_kind_from_string(const std::string& s);

/// Inputs are named indices (integers or half-integers); the generic kinds
/// additionally carry the boundary dimension data of the jump sequence.
struct ModuliProblem {
    ModuliKind kind = ModuliKind::Strip;
    int n = 1;
    std::map<std::string, HalfInteger> indices;
    std::vector<int> r_dims;       // dim R_0 .. dim R_k (generic kinds)
    std::vector<int> r_meet_dims;  // dim R_{j-1} cap R_j, j = 1..k
};

/// Index names each kind expects, in CLI --mu order.
std::vector<std::string> moduli_index_names(ModuliKind k);

std::int64_t virdim(const ModuliProblem& p);

/// The generic strip / half-strip problem a named kind reduces to, plus the
/// offset (Morse indices, moving parameters) so that
/// virdim(named) = virdim(generic) + offset.
struct ModuliReduction {
    ModuliProblem generic;
    HalfInteger offset;
};
ModuliReduction generic_reduction(const ModuliProblem& named);

/// Both sides of the product-splitting identity for the boundary Maslov
/// index: lhs is computed on the combined path and subspace, rhs on the two
/// factors.
struct IndexPair {
    HalfInteger lhs, rhs;
};

IndexPair split_product_index(const SymmetricPath& a1, const SymmetricPath& a2, int m,
                              const Subspace& w1, const Subspace& w2, int steps = 512);

IndexPair doubling_index(const SymmetricPath& a, int m, const Subspace& w, int steps = 512);

}  // namespace maslovkit
