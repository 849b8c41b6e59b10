#include "torfano/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace torfano {

namespace {

using Mat128 = Eigen::Matrix<Int128, Eigen::Dynamic, Eigen::Dynamic>;

Mat128 widen(const IntMatrix& m) {
    Mat128 w(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
    return w;
}

// Bareiss elimination in place; returns (rank, determinant-if-square).
// Row swaps flip the determinant sign.
std::pair<int, Int128> bareiss(Mat128& a) {
    const Eigen::Index n = a.rows(), m = a.cols();
    Int128 prev = 1;
    int sign = 1;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m && row < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < n; ++i)
            if (a(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) {
            a.row(piv).swap(a.row(row));
            sign = -sign;
        }
        for (Eigen::Index i = row + 1; i < n; ++i) {
            for (Eigen::Index j = col + 1; j < m; ++j)
                a(i, j) = exact_div(
                    checked_sub(checked_mul(a(row, col), a(i, j)), checked_mul(a(i, col), a(row, j))),
                    prev);
            a(i, col) = 0;
        }
        prev = a(row, col);
        ++row;
    }
    Int128 det = 0;
    if (n == m) det = (row == n) ? sign * prev : 0;
    return {static_cast<int>(row), det};
}

}  // namespace

Int128 determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::logic_error("determinant: not square");
    if (m.rows() == 0) return 1;
    Mat128 a = widen(m);
    return bareiss(a).second;
}

int rank(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Mat128 a = widen(m);
    return bareiss(a).first;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& rhs) {
    const Eigen::Index n = m.rows(), k = m.cols();
    Mat128 a(n, k + rhs.cols());
    a.leftCols(k) = widen(m);
    a.rightCols(rhs.cols()) = widen(rhs);
    // Forward elimination, tracking pivot columns.
    Int128 prev = 1;
    std::vector<Eigen::Index> pivot_row_of_col;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < k && row < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < n; ++i)
            if (a(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;  // column without pivot: not full column rank
        if (piv != row) a.row(piv).swap(a.row(row));
        for (Eigen::Index i = row + 1; i < n; ++i) {
            for (Eigen::Index j = col + 1; j < a.cols(); ++j)
                a(i, j) = exact_div(
                    checked_sub(checked_mul(a(row, col), a(i, j)), checked_mul(a(i, col), a(row, j))),
                    prev);
            a(i, col) = 0;
        }
        prev = a(row, col);
        pivot_row_of_col.push_back(row);
        ++row;
    }
    if (static_cast<Eigen::Index>(pivot_row_of_col.size()) != k) return std::nullopt;
    // Consistency: rows below the last pivot must have zero rhs.
    for (Eigen::Index i = row; i < n; ++i)
        for (Eigen::Index j = k; j < a.cols(); ++j)
            if (a(i, j) != 0) return std::nullopt;
    // Back substitution with exact rational bookkeeping: x_col = num/den.
    IntMatrix out(k, rhs.cols());
    for (Eigen::Index rc = 0; rc < rhs.cols(); ++rc) {
        std::vector<Int128> num(k), den(k);
        for (Eigen::Index col = k - 1; col >= 0; --col) {
            Eigen::Index r = pivot_row_of_col[col];
            // a(r,col)*x_col = rhs_r - sum_{j>col} a(r,j)*x_j
            Int128 acc_num = a(r, k + rc), acc_den = 1;
            for (Eigen::Index j = col + 1; j < k; ++j) {
                if (a(r, j) == 0) continue;
                // acc -= a(r,j) * num[j]/den[j]
                acc_num = checked_sub(checked_mul(acc_num, den[j]),
                                      checked_mul(checked_mul(a(r, j), num[j]), acc_den));
                acc_den = checked_mul(acc_den, den[j]);
            }
            num[col] = acc_num;
            den[col] = checked_mul(acc_den, a(r, col));
            if (den[col] == 0) return std::nullopt;
            // Normalize to keep magnitudes small.
            Int128 g = num[col];
            if (g < 0) g = -g;
            Int128 d = den[col] < 0 ? -den[col] : den[col];
            while (d != 0) {
                Int128 t = g % d;
                g = d;
                d = t;
            }
            if (g > 1) {
                num[col] /= g;
                den[col] /= g;
            }
            if (den[col] < 0) {
                den[col] = -den[col];
                num[col] = -num[col];
            }
        }
        for (Eigen::Index col = 0; col < k; ++col) {
            if (den[col] != 1) return std::nullopt;  // non-integral solution
            out(col, rc) = narrow(num[col]);
        }
    }
    return out;
}

bool spans_saturated_lattice(const IntMatrix& m) {
    const Eigen::Index k = m.cols();
    if (rank(m) != k) return false;
    // Saturated iff every unit vector rhs that lies in the rational column
    // span solves integrally; equivalently the gcd of the k x k minors is 1.
    // Compute via the Smith-normal-form diagonal product trick: reduce by
    // integer row/column operations until diagonal.
    Mat128 a = widen(m);
    const Eigen::Index n = a.rows();
    Eigen::Index t = 0;
    while (t < k) {
        // Find nonzero pivot in the remaining block.
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index j = t; j < k && pi < 0; ++j)
            for (Eigen::Index i = t; i < n; ++i)
                if (a(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        a.row(pi).swap(a.row(t));
        a.col(pj).swap(a.col(t));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (Eigen::Index i = t + 1; i < n; ++i) {
                if (a(i, t) == 0) continue;
                Int128 q = a(i, t) / a(t, t);
                for (Eigen::Index j = t; j < k; ++j)
                    a(i, j) = checked_sub(a(i, j), checked_mul(q, a(t, j)));
                if (a(i, t) != 0) {
                    a.row(i).swap(a.row(t));
                    clean = false;
                }
            }
            for (Eigen::Index j = t + 1; j < k; ++j) {
                if (a(t, j) == 0) continue;
                Int128 q = a(t, j) / a(t, t);
                for (Eigen::Index i = t; i < n; ++i)
                    a(i, j) = checked_sub(a(i, j), checked_mul(q, a(i, t)));
                if (a(t, j) != 0) {
                    a.col(j).swap(a.col(t));
                    clean = false;
                }
            }
        }
        ++t;
    }
    for (Eigen::Index i = 0; i < k; ++i) {
        Int128 d = a(i, i);
        if (d != 1 && d != -1) return false;
    }
    return true;
}

std::optional<IntVector> solve_underdetermined(const IntMatrix& rows, const IntVector& b) {
    const Eigen::Index m = rows.rows(), n = rows.cols();
    // Column Hermite reduction: rows * U = H with H in column echelon form.
    Mat128 h = widen(rows);
    Mat128 u = Mat128::Identity(n, n);
    Eigen::Index lead = 0;
    for (Eigen::Index i = 0; i < m && lead < n; ++i) {
        // Reduce row i across columns lead..n-1 to a single nonzero in 'lead'.
        Eigen::Index nz = -1;
        for (Eigen::Index j = lead; j < n; ++j)
            if (h(i, j) != 0) {
                nz = j;
                break;
            }
        if (nz < 0) continue;
        h.col(nz).swap(h.col(lead));
        u.col(nz).swap(u.col(lead));
        for (Eigen::Index j = lead + 1; j < n; ++j) {
            while (h(i, j) != 0) {
                Int128 q = h(i, lead) / h(i, j);
                if (q != 0) {
                    for (Eigen::Index r = 0; r < m; ++r)
                        h(r, lead) = checked_sub(h(r, lead), checked_mul(q, h(r, j)));
                    for (Eigen::Index r = 0; r < n; ++r)
                        u(r, lead) = checked_sub(u(r, lead), checked_mul(q, u(r, j)));
                }
                h.col(lead).swap(h.col(j));
                u.col(lead).swap(u.col(j));
            }
        }
        if (h(i, lead) != 0) ++lead;
    }
    // Solve H * y = b by forward substitution on the echelon columns.
    Eigen::Matrix<Int128, Eigen::Dynamic, 1> y = Eigen::Matrix<Int128, Eigen::Dynamic, 1>::Zero(n);
    Eigen::Matrix<Int128, Eigen::Dynamic, 1> resid(m);
    for (Eigen::Index i = 0; i < m; ++i) resid[i] = b[i];
    for (Eigen::Index j = 0; j < lead; ++j) {
        Eigen::Index i = 0;
        while (i < m && h(i, j) == 0) ++i;
        if (i == m) continue;
        if (resid[i] % h(i, j) != 0) return std::nullopt;
        Int128 q = resid[i] / h(i, j);
        y[j] = q;
        for (Eigen::Index r = 0; r < m; ++r) resid[r] = checked_sub(resid[r], checked_mul(q, h(r, j)));
    }
    for (Eigen::Index i = 0; i < m; ++i)
        if (resid[i] != 0) return std::nullopt;
    IntVector x(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        Int128 acc = 0;
        for (Eigen::Index j = 0; j < n; ++j) acc = checked_add(acc, checked_mul(u(r, j), y[j]));
        x[r] = narrow(acc);
    }
    return x;
}

IntMatrix integer_kernel(const IntMatrix& rows) {
    const Eigen::Index m = rows.rows(), n = rows.cols();
    Mat128 h = widen(rows);
    Mat128 u = Mat128::Identity(n, n);
    Eigen::Index lead = 0;
    for (Eigen::Index i = 0; i < m && lead < n; ++i) {
        Eigen::Index nz = -1;
        for (Eigen::Index j = lead; j < n; ++j)
            if (h(i, j) != 0) {
                nz = j;
                break;
            }
        if (nz < 0) continue;
        h.col(nz).swap(h.col(lead));
        u.col(nz).swap(u.col(lead));
        for (Eigen::Index j = lead + 1; j < n; ++j) {
            while (h(i, j) != 0) {
                Int128 q = h(i, lead) / h(i, j);
                if (q != 0) {
                    for (Eigen::Index r = 0; r < m; ++r)
                        h(r, lead) = checked_sub(h(r, lead), checked_mul(q, h(r, j)));
                    for (Eigen::Index r = 0; r < n; ++r)
                        u(r, lead) = checked_sub(u(r, lead), checked_mul(q, u(r, j)));
                }
                h.col(lead).swap(h.col(j));
                u.col(lead).swap(u.col(j));
            }
        }
        if (h(i, lead) != 0) ++lead;
    }
    IntMatrix ker(n, n - lead);
    for (Eigen::Index j = lead; j < n; ++j)
        for (Eigen::Index r = 0; r < n; ++r) ker(r, j - lead) = narrow(u(r, j));
    return ker;
}

std::vector<Int128> characteristic_polynomial(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::logic_error("characteristic_polynomial: not square");
    const Eigen::Index n = m.rows();
    Mat128 a = widen(m);
    std::vector<Int128> c(static_cast<size_t>(n) + 1);
    c[0] = 1;
    Mat128 mk = Mat128::Zero(n, n);  // M_0 = 0
    for (Eigen::Index k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{k-1} I ; c_k = -tr(A*M_k)/k
        Mat128 am(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                Int128 acc = 0;
                for (Eigen::Index t = 0; t < n; ++t)
                    acc = checked_add(acc, checked_mul(a(i, t), mk(t, j)));
                am(i, j) = acc;
            }
        for (Eigen::Index i = 0; i < n; ++i) am(i, i) = checked_add(am(i, i), c[k - 1]);
        mk = am;
        Int128 tr = 0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index t = 0; t < n; ++t)
                tr = checked_add(tr, checked_mul(a(i, t), mk(t, i)));
        c[k] = -exact_div(tr, k);
    }
    return c;
}

int sign_variations(const std::vector<Int128>& coeffs) {
    int count = 0;
    int last = 0;
    for (Int128 c : coeffs) {
        if (c == 0) continue;
        int s = c > 0 ? 1 : -1;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int zero_root_multiplicity(const std::vector<Int128>& coeffs) {
    int mult = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend() && *it == 0; ++it) ++mult;
    return mult;
}

}  // namespace torfano
