#pragma once

#include "relcat/bigint.hpp"
#include "relcat/sset.hpp"

#include <string>
#include <vector>

namespace relcat {

/* Dense integer matrix, row-major, arbitrary-precision entries. */
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}
    BigInt& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const IntMatrix& o) const;
    static IntMatrix identity(int n);
    static IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
};

/* Sparse column-major matrix with machine-int entries; the chain boundary
 * representation. Entries must stay small during assembly (faces contribute
 * +-1); elimination escalates to BigInt when needed. */
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> col;  // (row, value), sorted by row

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}
    void add(int r, int c, long long v);
    IntMatrix dense() const;
};

struct SmithResult {
    std::vector<BigInt> diagonal;  // divisibility chain, zero-padded to min(rows, cols)
    int rank = 0;
    IntMatrix u, v;  // A = U * D * V when transforms requested
    bool has_transforms = false;
};

/* Full Smith normal form with unimodular transforms; verified internally by
 * reconstruction unless `verify` is false. */
SmithResult smith_normal_form(const IntMatrix& a, bool with_transforms = true, bool verify = true);

/* Rank and nontrivial invariant factors only, via unit-pivot sparse
 * elimination with a dense arbitrary-precision core for what remains. */
struct InvariantFactors {
    int rank = 0;
    std::vector<BigInt> torsion;  // factors > 1, divisibility order
};
InvariantFactors invariant_factors(const SparseMatrix& a);

struct HomologyGroup {
    int rank = 0;
    std::vector<BigInt> torsion;

    bool operator==(const HomologyGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    std::string to_string() const;
};

/* Chain complex of free abelian groups: basis per degree with boundary
 * matrices d[k]: C_k -> C_{k-1}. */
struct ChainComplex {
    int top = -1;                         // highest degree carried
    std::vector<int> dim;                 // dim[k] = rank of C_k
    std::vector<SparseMatrix> boundary;   // boundary[k] defined for 1 <= k <= top
    std::vector<std::vector<int>> basis_simplex;  // degree -> list of simplex indices

    std::string audit_dd_zero() const;  // empty when every composite vanishes
};

/* Normalized chains: basis the nondegenerate simplices through degree
 * degree_bound, boundaries alternating sums with degenerate faces dropped. */
ChainComplex normalized_chains(const TruncatedSimplicialSet& x, int degree_bound);

HomologyGroup homology(const ChainComplex& c, int k);

/* Direct sum of per-degree homology along a simplicial map's cone:
 * cone(f)_k = X_{k-1} (+) Y_k with d(x, y) = (-dx, dy - f(x)). */
ChainComplex mapping_cone(const SimplicialMap& f, int degree_bound);

/* Chain map on normalized chains induced by a simplicial map (degenerate
 * images drop to zero). */
SparseMatrix induced_chain_map(const SimplicialMap& f, const ChainComplex& cx,
                               const ChainComplex& cy, int k);

struct WeCertificate {
    bool pi0_bijection = false;
    int pi0_src = 0;
    int pi0_tgt = 0;
    std::vector<HomologyGroup> cone_homology;  // degrees 0..hdeg
    std::vector<int> failing_degrees;
    bool pass = false;
};

/* Necessary-condition certificate: pi0 bijection plus acyclicity of the
 * algebraic mapping cone through degree hdeg. */
WeCertificate we_certificate(const SimplicialMap& f, int hdeg);

}  // namespace relcat
