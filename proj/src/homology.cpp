#include "relcat/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace relcat {

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw Error("IntMatrix::mul: shape mismatch");
    IntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return out;
}

void SparseMatrix::add(int r, int c, long long v) {
    if (v == 0) return;
    auto& column = col[c];
    auto it = std::lower_bound(column.begin(), column.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != column.end() && it->first == r) {
        it->second += v;
        if (it->second == 0) column.erase(it);
    } else {
        column.insert(it, {r, v});
    }
}

IntMatrix SparseMatrix::dense() const {
    IntMatrix out(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (auto& [r, v] : col[c]) out.at(r, c) = BigInt(v);
    return out;
}

namespace {

/* Dense Smith normal form. Entries are cleared with unimodular 2x2 gcd
 * combines (one combine per non-divisible entry, shrinking the pivot to the
 * gcd), which keeps coefficient growth polynomial where remainder-swap
 * elimination is doubly exponential. */
void smith_dense(IntMatrix& m, IntMatrix* u, IntMatrix* v) {
    int n = std::min(m.rows, m.cols);
    auto row_axpy = [&](int dst, int src, const BigInt& c) {  // row_dst += c * row_src
        for (int j = 0; j < m.cols; ++j) m.at(dst, j) += c * m.at(src, j);
        if (u)  // maintain A = U D V: U col_src -= c * col_dst
            for (int i = 0; i < u->rows; ++i) u->at(i, src) -= c * u->at(i, dst);
    };
    auto col_axpy = [&](int dst, int src, const BigInt& c) {
        for (int i = 0; i < m.rows; ++i) m.at(i, dst) += c * m.at(i, src);
        if (v)
            for (int j = 0; j < v->cols; ++j) v->at(src, j) -= c * v->at(dst, j);
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        if (u)
            for (int i = 0; i < u->rows; ++i) std::swap(u->at(i, a), u->at(i, b));
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        if (v)
            for (int j = 0; j < v->cols; ++j) std::swap(v->at(a, j), v->at(b, j));
    };
    auto row_negate = [&](int a) {
        for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
        if (u)
            for (int i = 0; i < u->rows; ++i) u->at(i, a) = -u->at(i, a);
    };
    // rows (t, i): pivot a = m(t,t), entry b = m(i,t) -> (g, 0)
    auto row_gcd_combine = [&](int t, int i) {
        BigInt a = m.at(t, t), b = m.at(i, t);
        ExtendedGcd e = egcd(a, b);
        BigInt as = a / e.g, bs = b / e.g;
        for (int j = 0; j < m.cols; ++j) {
            BigInt mt = m.at(t, j), mi = m.at(i, j);
            m.at(t, j) = e.x * mt + e.y * mi;
            m.at(i, j) = bs * mt - as * mi;  // det -1 block; sign handled below
        }
        if (u)
            for (int r = 0; r < u->rows; ++r) {
                BigInt ut = u->at(r, t), ui = u->at(r, i);
                // inverse-transpose bookkeeping for L = [[x, y], [bs, -as]]:
                // L^{-1} = [[as, y], [bs, -x]] (det L = -1)
                u->at(r, t) = as * ut + bs * ui;
                u->at(r, i) = e.y * ut - e.x * ui;
            }
    };
    // columns (t, j): pivot a = m(t,t), entry b = m(t,j) -> (g, 0)
    auto col_gcd_combine = [&](int t, int j) {
        BigInt a = m.at(t, t), b = m.at(t, j);
        ExtendedGcd e = egcd(a, b);
        BigInt as = a / e.g, bs = b / e.g;
        for (int i = 0; i < m.rows; ++i) {
            BigInt mt = m.at(i, t), mj = m.at(i, j);
            m.at(i, t) = e.x * mt + e.y * mj;
            m.at(i, j) = bs * mt - as * mj;
        }
        if (v)
            for (int cidx = 0; cidx < v->cols; ++cidx) {
                BigInt vt = v->at(t, cidx), vj = v->at(j, cidx);
                v->at(t, cidx) = as * vt + bs * vj;
                v->at(j, cidx) = e.y * vt - e.x * vj;
            }
    };

    for (int t = 0; t < n; ++t) {
        // least-magnitude nonzero of the trailing block becomes the pivot
        int pr = -1, pc = -1;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                if (m.at(i, j).is_zero()) continue;
                if (pr < 0 || m.at(i, j).abs() < m.at(pr, pc).abs()) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);
        if (m.at(t, t).is_negative()) row_negate(t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m.rows; ++i) {
                BigInt b = m.at(i, t);
                if (b.is_zero()) continue;
                if ((b % m.at(t, t)).is_zero()) {
                    row_axpy(i, t, -(b / m.at(t, t)));
                } else {
                    row_gcd_combine(t, i);
                    clean = false;  // pivot shrank; rescan the row as well
                }
            }
            for (int j = t + 1; j < m.cols; ++j) {
                BigInt b = m.at(t, j);
                if (b.is_zero()) continue;
                if ((b % m.at(t, t)).is_zero()) {
                    col_axpy(j, t, -(b / m.at(t, t)));
                } else {
                    col_gcd_combine(t, j);
                    clean = false;
                }
            }
        }
        if (m.at(t, t).is_negative()) row_negate(t);
    }
    // enforce d_i | d_{i+1}
    bool fixed = false;
    while (!fixed) {
        fixed = true;
        for (int t = 0; t + 1 < n; ++t) {
            BigInt a = m.at(t, t);
            BigInt b = m.at(t + 1, t + 1);
            if (a.is_zero()) {
                if (!b.is_zero()) {  // move the nonzero entry forward
                    row_swap(t, t + 1);
                    col_swap(t, t + 1);
                    fixed = false;
                }
                continue;
            }
            if (b.is_zero() || (b % a).is_zero()) continue;
            // fold b into column t, then one combine pair restores diagonality
            col_axpy(t, t + 1, BigInt(1));
            row_gcd_combine(t, t + 1);
            if (!m.at(t, t + 1).is_zero())
                col_axpy(t + 1, t, -(m.at(t, t + 1) / m.at(t, t)));
            if (m.at(t, t).is_negative()) row_negate(t);
            if (m.at(t + 1, t + 1).is_negative()) row_negate(t + 1);
            fixed = false;
        }
    }
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a, bool with_transforms, bool verify) {
    IntMatrix m = a;
    SmithResult out;
    IntMatrix u, v;
    if (with_transforms) {
        u = IntMatrix::identity(a.rows);
        v = IntMatrix::identity(a.cols);
    }
    smith_dense(m, with_transforms ? &u : nullptr, with_transforms ? &v : nullptr);
    int n = std::min(a.rows, a.cols);
    for (int t = 0; t < n; ++t) {
        out.diagonal.push_back(m.at(t, t));
        if (!m.at(t, t).is_zero()) ++out.rank;
    }
    if (with_transforms) {
        out.u = std::move(u);
        out.v = std::move(v);
        out.has_transforms = true;
        if (verify) {
            IntMatrix d(a.rows, a.cols);
            for (int t = 0; t < n; ++t) d.at(t, t) = out.diagonal[t];
            if (!(IntMatrix::mul(IntMatrix::mul(out.u, d), out.v) == a))
                throw Error("smith_normal_form: reconstruction failed");
        }
    }
    for (int t = 1; t < out.rank; ++t)
        if (!(out.diagonal[t] % out.diagonal[t - 1]).is_zero())
            throw Error("smith_normal_form: divisibility chain violated");
    return out;
}

InvariantFactors invariant_factors(const SparseMatrix& a) {
    // phase 1: eliminate with +-1 pivots, machine integers, overflow-checked
    std::vector<std::map<int, long long>> cols(a.cols);
    std::vector<std::map<int, char>> row_occupancy(a.rows);  // row -> set of cols
    for (int c = 0; c < a.cols; ++c)
        for (auto& [r, val] : a.col[c]) {
            cols[c][r] = val;
            row_occupancy[r][c] = 1;
        }
    auto set_entry = [&](int r, int c, long long val) {
        if (val == 0) {
            cols[c].erase(r);
            row_occupancy[r].erase(c);
        } else {
            cols[c][r] = val;
            row_occupancy[r][c] = 1;
        }
    };
    std::vector<char> row_done(a.rows, 0), col_done(a.cols, 0);
    int unit_rank = 0;
    bool overflow = false;
    while (!overflow) {
        // pick a +-1 pivot with the fewest fill-in candidates
        int pr = -1, pc = -1;
        long best = -1;
        for (int c = 0; c < a.cols && best != 0; ++c) {
            if (col_done[c]) continue;
            for (auto& [r, val] : cols[c]) {
                if (row_done[r] || (val != 1 && val != -1)) continue;
                long score = static_cast<long>(cols[c].size() - 1) *
                             static_cast<long>(row_occupancy[r].size() - 1);
                if (best < 0 || score < best) {
                    best = score;
                    pr = r;
                    pc = c;
                    if (best == 0) break;
                }
            }
        }
        if (pr < 0) break;
        long long pivot = cols[pc][pr];
        // clear the pivot row from every other column
        std::vector<int> touched;
        for (auto& [c, _] : row_occupancy[pr])
            if (c != pc && !col_done[c]) touched.push_back(c);
        for (int c : touched) {
            long long factor = cols[c][pr];  // eliminate: col_c -= factor/pivot * col_pc
            long long mult = pivot == 1 ? factor : -factor;
            std::vector<std::pair<int, long long>> updates;
            for (auto& [r, val] : cols[pc]) {
                if (row_done[r]) continue;
                long long delta;
                if (__builtin_mul_overflow(val, mult, &delta)) {
                    overflow = true;
                    break;
                }
                long long cur = 0;
                auto it = cols[c].find(r);
                if (it != cols[c].end()) cur = it->second;
                long long next;
                if (__builtin_sub_overflow(cur, delta, &next)) {
                    overflow = true;
                    break;
                }
                updates.push_back({r, next});
            }
            if (overflow) break;
            for (auto& [r, next] : updates) set_entry(r, c, next);
        }
        if (overflow) break;
        row_done[pr] = 1;
        col_done[pc] = 1;
        ++unit_rank;
    }

    // phase 2: dense arbitrary-precision Smith form on the residual block
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < a.rows; ++r)
        if (!row_done[r]) live_rows.push_back(r);
    for (int c = 0; c < a.cols; ++c)
        if (!col_done[c]) live_cols.push_back(c);
    std::map<int, int> row_pos;
    for (size_t i = 0; i < live_rows.size(); ++i) row_pos[live_rows[i]] = static_cast<int>(i);
    IntMatrix residual(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (size_t j = 0; j < live_cols.size(); ++j)
        for (auto& [r, val] : cols[live_cols[j]]) {
            if (row_done[r]) continue;
            residual.at(row_pos[r], static_cast<int>(j)) = BigInt(val);
        }
    SmithResult core = smith_normal_form(residual, false, false);

    InvariantFactors out;
    out.rank = unit_rank + core.rank;
    for (const BigInt& d : core.diagonal)
        if (!d.is_zero() && d != BigInt(1)) out.torsion.push_back(d);
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

std::string HomologyGroup::to_string() const {
    std::ostringstream s;
    s << "Z^" << rank;
    for (const auto& t : torsion) s << " + Z/" << t.to_string();
    return s.str();
}

std::string ChainComplex::audit_dd_zero() const {
    for (int k = 2; k <= top; ++k) {
        // compose sparse boundaries: for each basis column, push twice
        for (int c = 0; c < dim[k]; ++c) {
            std::map<int, long long> acc;
            for (auto& [mid, v1] : boundary[k].col[c])
                for (auto& [r, v2] : boundary[k - 1].col[mid]) acc[r] += v1 * v2;
            for (auto& [r, v] : acc)
                if (v != 0)
                    return "dd != 0 at degree " + std::to_string(k) + " basis " + std::to_string(c);
        }
    }
    return "";
}

ChainComplex normalized_chains(const TruncatedSimplicialSet& x, int degree_bound) {
    if (degree_bound > x.bound())
        throw Error("normalized_chains: degree bound exceeds truncation");
    ChainComplex c;
    c.top = degree_bound;
    c.dim.resize(degree_bound + 1, 0);
    c.boundary.resize(degree_bound + 1);
    c.basis_simplex.resize(degree_bound + 1);
    std::vector<std::vector<int>> col_of(degree_bound + 1);  // simplex -> basis column or -1
    for (int k = 0; k <= degree_bound; ++k) {
        col_of[k].assign(x.count(k), -1);
        for (int s = 0; s < x.count(k); ++s)
            if (!x.is_degenerate(k, s)) {
                col_of[k][s] = c.dim[k]++;
                c.basis_simplex[k].push_back(s);
            }
    }
    for (int k = 1; k <= degree_bound; ++k) {
        c.boundary[k] = SparseMatrix(c.dim[k - 1], c.dim[k]);
        for (size_t b = 0; b < c.basis_simplex[k].size(); ++b) {
            int s = c.basis_simplex[k][b];
            for (int i = 0; i <= k; ++i) {
                int f = x.face(k, s, i);
                if (col_of[k - 1][f] < 0) continue;  // degenerate faces vanish
                c.boundary[k].add(col_of[k - 1][f], static_cast<int>(b), i % 2 == 0 ? 1 : -1);
            }
        }
    }
    return c;
}

HomologyGroup homology(const ChainComplex& c, int k) {
    if (k < 0 || k > c.top) throw Error("homology: degree out of range");
    if (k + 1 > c.top)
        throw Error("homology: need boundaries one degree above the requested one");
    int rank_k = 0;
    if (k >= 1) rank_k = invariant_factors(c.boundary[k]).rank;
    InvariantFactors above = invariant_factors(c.boundary[k + 1]);
    HomologyGroup h;
    h.rank = c.dim[k] - rank_k - above.rank;
    h.torsion = above.torsion;
    return h;
}

SparseMatrix induced_chain_map(const SimplicialMap& f, const ChainComplex& cx,
                               const ChainComplex& cy, int k) {
    // basis columns of cx at degree k map to basis columns of cy (or zero)
    const TruncatedSimplicialSet& Y = *f.tgt;
    std::vector<int> col_of_y(Y.count(k), -1);
    for (size_t b = 0; b < cy.basis_simplex[k].size(); ++b) col_of_y[cy.basis_simplex[k][b]] = static_cast<int>(b);
    SparseMatrix out(cy.dim[k], cx.dim[k]);
    for (size_t b = 0; b < cx.basis_simplex[k].size(); ++b) {
        int s = cx.basis_simplex[k][b];
        int img = f.map[k][s];
        if (Y.is_degenerate(k, img)) continue;
        out.add(col_of_y[img], static_cast<int>(b), 1);
    }
    return out;
}

ChainComplex mapping_cone(const SimplicialMap& f, int degree_bound) {
    if (degree_bound + 1 > f.src->bound() || degree_bound + 1 > f.tgt->bound())
        throw Error("mapping_cone: truncations too small for requested degree");
    ChainComplex cx = normalized_chains(*f.src, degree_bound + 1);
    ChainComplex cy = normalized_chains(*f.tgt, degree_bound + 1);
    ChainComplex cone;
    cone.top = degree_bound + 1;
    cone.dim.resize(cone.top + 1);
    cone.boundary.resize(cone.top + 1);
    cone.basis_simplex.resize(cone.top + 1);
    for (int k = 0; k <= cone.top; ++k)
        cone.dim[k] = (k >= 1 ? cx.dim[k - 1] : 0) + cy.dim[k];
    for (int k = 1; k <= cone.top; ++k) {
        // order: X-part first (degrees shifted), then Y-part
        cone.boundary[k] = SparseMatrix(cone.dim[k - 1], cone.dim[k]);
        int xoff_rows = 0;
        int yoff_rows = (k - 1 >= 1 ? cx.dim[k - 2] : 0);
        // X-part columns; -f on the X-part lands in Y_{k-1}
        SparseMatrix fk = induced_chain_map(f, cx, cy, k - 1);
        for (int cxcol = 0; cxcol < cx.dim[k - 1]; ++cxcol) {
            if (k - 1 >= 1)
                for (auto& [r, v] : cx.boundary[k - 1].col[cxcol])
                    cone.boundary[k].add(xoff_rows + r, cxcol, -v);
            for (auto& [r, v] : fk.col[cxcol]) cone.boundary[k].add(yoff_rows + r, cxcol, -v);
        }
        // Y-part columns
        for (int cycol = 0; cycol < cy.dim[k]; ++cycol)
            for (auto& [r, v] : cy.boundary[k].col[cycol])
                cone.boundary[k].add(yoff_rows + r, (k >= 1 ? cx.dim[k - 1] : 0) + cycol, v);
    }
    return cone;
}

WeCertificate we_certificate(const SimplicialMap& f, int hdeg) {
    std::string bad = f.audit();
    if (!bad.empty()) throw Error("we_certificate: map not simplicial: " + bad);
    WeCertificate cert;
    Pi0 px = pi0(*f.src);
    Pi0 py = pi0(*f.tgt);
    cert.pi0_src = px.components;
    cert.pi0_tgt = py.components;
    std::vector<int> image(px.components, -1);
    bool injective = true;
    for (int v = 0; v < f.src->count(0); ++v) {
        int cx = px.component_of_vertex[v];
        int cy = py.component_of_vertex[f.map[0][v]];
        if (image[cx] == -1)
            image[cx] = cy;
        else if (image[cx] != cy)
            throw Error("we_certificate: pi0 map ill-defined");
    }
    std::vector<char> hit(py.components, 0);
    for (int cx = 0; cx < px.components; ++cx) {
        if (image[cx] < 0) continue;
        if (hit[image[cx]]) injective = false;
        hit[image[cx]] = 1;
    }
    bool surjective = true;
    for (char h : hit) surjective = surjective && h;
    cert.pi0_bijection = injective && surjective && px.components == py.components;

    ChainComplex cone = mapping_cone(f, hdeg);
    std::string dd = cone.audit_dd_zero();
    if (!dd.empty()) throw Error("we_certificate: cone is not a complex: " + dd);
    for (int k = 0; k <= hdeg; ++k) {
        HomologyGroup h = homology(cone, k);
        cert.cone_homology.push_back(h);
        if (!h.is_trivial()) cert.failing_degrees.push_back(k);
    }
    cert.pass = cert.pi0_bijection && cert.failing_degrees.empty();
    return cert;
}

}  // namespace relcat
