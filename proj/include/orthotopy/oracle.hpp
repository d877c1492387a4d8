#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "intmat.hpp"
#include "snf.hpp"

namespace orthotopy {

// Block-swap permutation diag(I_{(j-1)n}, [[0,I_n],[I_n,0]], I_{(r-j-1)n})
// of size rn: exchanges the j-th and (j+1)-th of r blocks of size n.
inline IntMat perm_p_j(long long n, long long r, long long j) {
    if (n < 1 || r < 2 || j < 1 || j > r - 1)
        throw OutOfRangeError("perm_p_j: need n >= 1 and 1 <= j <= r - 1");
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t size = static_cast<std::size_t>(r) * nn;
    IntMat p(size, size);
    const std::size_t lo = (static_cast<std::size_t>(j) - 1) * nn;
    for (std::size_t k = 0; k < size; ++k) {
        std::size_t image = k;
        if (k >= lo && k < lo + nn) image = k + nn;
        else if (k >= lo + nn && k < lo + 2 * nn) image = k - nn;
        p(image, k) = 1;
    }
    return p;
}

// Identity with the last two basis vectors exchanged.
inline IntMat w_d(long long size) {
    if (size < 2) throw OutOfRangeError("w_d: size must be >= 2");
    IntMat m = IntMat::identity(static_cast<std::size_t>(size));
    m.swap_rows(static_cast<std::size_t>(size) - 2, static_cast<std::size_t>(size) - 1);
    return m;
}

// Identity with the first two basis vectors exchanged.
inline IntMat w_u(long long size) {
    if (size < 2) throw OutOfRangeError("w_u: size must be >= 2");
    IntMat m = IntMat::identity(static_cast<std::size_t>(size));
    m.swap_rows(0, 1);
    return m;
}

// diag(I_n, ..., I_n, A, I_n, ..., I_n) with A in block slot j of r.
inline IntMat s_j_embed(const IntMat& a, long long r, long long j) {
    if (a.rows() != a.cols()) throw ShapeError("s_j_embed: block is not square");
    if (r < 1 || j < 1 || j > r) throw OutOfRangeError("s_j_embed: need 1 <= j <= r");
    const std::size_t n = a.rows();
    IntMat m = IntMat::identity(static_cast<std::size_t>(r) * n);
    m.set_block((static_cast<std::size_t>(j) - 1) * n, (static_cast<std::size_t>(j) - 1) * n, a);
    return m;
}

// Checks the slot-shift conjugations s_{j+1}(A) = Q s_j(A) Q^{-1} for
// j = 1..r-1 with a determinant-1 conjugator Q in each case:
//   n even: Q = P_j (and det(P_j) = 1 is part of the claim);
//   n odd:  Q = P_1 W_d for j = 1 and Q = W_u P_j for j >= 2, together with
//           det(W_d P_j) = det(W_u P_j) = 1.
// The lone 2x2 case (n = 1, r = 2) admits no determinant-1 permutation
// conjugator; the rotation [[0,-1],[1,0]] serves instead.
// All identities are checked by exact multiplication (Q S = S' Q).
inline bool verify_sj_conjugation(long long n, long long r, const IntMat& a) {
    if (a.rows() != a.cols() || a.rows() != static_cast<std::size_t>(n))
        throw ShapeError("verify_sj_conjugation: A must be n x n");
    if (n < 1 || r < 2) throw OutOfRangeError("verify_sj_conjugation: need n >= 1, r >= 2");
    const long long size = r * n;
    for (long long j = 1; j <= r - 1; ++j) {
        const IntMat sj = s_j_embed(a, r, j);
        const IntMat sj1 = s_j_embed(a, r, j + 1);
        const IntMat pj = perm_p_j(n, r, j);
        if (n % 2 == 0) {
            if (pj.det() != 1) return false;
            if (pj * sj * pj != sj1) return false;
            continue;
        }
        // Determinant bookkeeping holds for every odd n, including the
        // degenerate size.
        if ((w_d(size) * pj).det() != 1) return false;
        if ((w_u(size) * pj).det() != 1) return false;
        IntMat q;
        if (size == 2) q = IntMat::from_rows({{0, -1}, {1, 0}});
        else if (j == 1) q = pj * w_d(size);
        else q = w_u(size) * pj;
        if (q.det() != 1) return false;
        if (q * sj != sj1 * q) return false;
    }
    return true;
}

// Perfect-shuffle permutation of size mn with columns
// e_1, e_{n+1}, e_{2n+1}, ..., e_2, e_{n+2}, ...: column k (0-based) is
// e_{(k mod m) n + (k div m)}.
inline IntMat perm_p_mn(long long m, long long n) {
    if (m < 1 || n < 1) throw OutOfRangeError("perm_p_mn: need m, n >= 1");
    const std::size_t mm = static_cast<std::size_t>(m);
    const std::size_t size = mm * static_cast<std::size_t>(n);
    IntMat p(size, size);
    for (std::size_t k = 0; k < size; ++k)
        p((k % mm) * static_cast<std::size_t>(n) + k / mm, k) = 1;
    return p;
}

// Checks the shuffle conjugation A (x) I_n = P (I_n (x) A) P^{-1} together
// with the chain it rests on: the product identity
// I_n (x) A = s_1(A) ... s_n(A), P^t = P^{-1}, and — when det(P) = -1 —
// the determinant-1 refactoring
//   L(A) = (P W_d) s_1(A)...s_{n-1}(A) (P W_d)^{-1} (P W_u) s_n(A) (P W_u)^{-1}
// with det(P W_d) = det(P W_u) = det(W_d W_u) = 1.
inline bool verify_lr_conjugation(long long m, long long n, const IntMat& a) {
    if (a.rows() != a.cols() || a.rows() != static_cast<std::size_t>(m))
        throw ShapeError("verify_lr_conjugation: A must be m x m");
    if (m < 1 || n < 1) throw OutOfRangeError("verify_lr_conjugation: need m, n >= 1");
    const std::size_t size = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
    const IntMat left = IntMat::kronecker(a, IntMat::identity(static_cast<std::size_t>(n)));
    const IntMat right = IntMat::kronecker(IntMat::identity(static_cast<std::size_t>(n)), a);

    IntMat prod = IntMat::identity(size);
    for (long long j = 1; j <= n; ++j) prod = prod * s_j_embed(a, n, j);
    if (prod != right) return false;

    const IntMat p = perm_p_mn(m, n);
    const IntMat pt = p.transpose();
    if (p * pt != IntMat::identity(size)) return false;
    if (p * right * pt != left) return false;

    if (p.det() == -1) {
        // det(P) = -1 forces m, n >= 2, so W_d and W_u act inside the first
        // and last blocks and the refactored display is exact.
        const IntMat wd = w_d(static_cast<long long>(size));
        const IntMat wu = w_u(static_cast<long long>(size));
        if ((p * wd).det() != 1 || (p * wu).det() != 1 || (wd * wu).det() != 1) return false;
        IntMat head = IntMat::identity(size);
        for (long long j = 1; j <= n - 1; ++j) head = head * s_j_embed(a, n, j);
        const IntMat tail = s_j_embed(a, n, n);
        const IntMat refactored =
            (p * wd) * head * (wd * pt) * (p * wu) * tail * (wu * pt);
        if (refactored != left) return false;
    }
    return true;
}

enum class Symmetry { symmetric, antisymmetric, none };

inline std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::symmetric: return "symmetric";
        case Symmetry::antisymmetric: return "antisymmetric";
        default: return "none";
    }
}

inline Symmetry symmetry_of(const IntMat& m) {
    if (m.rows() != m.cols()) return Symmetry::none;
    bool sym = true, skew = true;
    for (std::size_t i = 0; i < m.rows() && (sym || skew); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            if (m(i, j) != m(j, i)) sym = false;
            if (m(i, j) != -m(j, i)) skew = false;
        }
    if (sym) return Symmetry::symmetric;
    if (skew) return Symmetry::antisymmetric;
    return Symmetry::none;
}

enum class InvolutionKind { orthogonal, symplectic };

inline std::string to_string(InvolutionKind k) {
    return k == InvolutionKind::orthogonal ? "orthogonal" : "symplectic";
}

// Classification result plus the dimension of the fixed bilinear-form space:
// n(n+1)/2 in the symmetric case, n(n-1)/2 in the antisymmetric one.
struct InvolutionInfo {
    InvolutionKind kind;
    Int space_dim;
};

inline InvolutionInfo classify_involution(const IntMat& a, long long n) {
    if (a.rows() != a.cols() || a.rows() != static_cast<std::size_t>(n))
        throw ShapeError("classify_involution: A must be n x n");
    const Symmetry s = symmetry_of(a);
    if (s == Symmetry::none)
        throw NotInvolutionError("classify_involution: A is neither symmetric nor antisymmetric");
    if (a.det() == 0) throw SingularMatrixError("classify_involution: A is singular");
    if (s == Symmetry::symmetric)
        return {InvolutionKind::orthogonal, Int(n) * (n + 1) / 2};
    return {InvolutionKind::symplectic, Int(n) * (n - 1) / 2};
}

// Rank over Q of M |-> M + M^t (symmetric = true) or M |-> M - M^t on the
// n^2-dimensional matrix space: the dimension of the (anti)symmetric
// subspace.
inline long long symmetrization_rank(long long n, bool symmetric) {
    if (n < 1) throw OutOfRangeError("symmetrization_rank: n must be >= 1");
    const std::size_t nn = static_cast<std::size_t>(n);
    IntMat op(nn * nn, nn * nn);
    for (std::size_t p = 0; p < nn; ++p)
        for (std::size_t q = 0; q < nn; ++q) {
            const std::size_t col = p * nn + q;
            op(p * nn + q, col) += 1;
            op(q * nn + p, col) += symmetric ? 1 : -1;
        }
    return static_cast<long long>(rank(op));
}

// Standard antisymmetric form [[0, I_k], [-I_k, 0]] of size 2k.
inline IntMat j_form(long long k) {
    if (k < 1) throw OutOfRangeError("j_form: k must be >= 1");
    const std::size_t kk = static_cast<std::size_t>(k);
    IntMat m(2 * kk, 2 * kk);
    for (std::size_t i = 0; i < kk; ++i) {
        m(i, kk + i) = 1;
        m(kk + i, i) = -1;
    }
    return m;
}

struct TensorForm {
    IntMat form;
    Symmetry symmetry;
};

// Kronecker product of two nondegenerate bilinear forms, tagged with the
// symmetry type of the result.
inline TensorForm tensor_bilinear(const IntMat& b, const IntMat& b_prime) {
    if (b.rows() != b.cols() || b_prime.rows() != b_prime.cols())
        throw ShapeError("tensor_bilinear: forms must be square");
    if (b.det() == 0 || b_prime.det() == 0)
        throw SingularMatrixError("tensor_bilinear: form is singular");
    IntMat form = IntMat::kronecker(b, b_prime);
    const Symmetry s = symmetry_of(form);
    return {std::move(form), s};
}

// Deterministic 64-bit generator (SplitMix64); fixed seeds make oracle runs
// byte-for-byte reproducible across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [-9, 9]; modulo bias over 2^64 is immaterial for a desk
    // oracle.
    long long entry() { return static_cast<long long>(next() % 19) - 9; }
};

inline IntMat random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.entry();
    return m;
}

inline IntMat random_skew(SplitMix64& rng, std::size_t n) {
    const IntMat m = random_matrix(rng, n, n);
    return m - m.transpose();
}

struct LemmaCheck {
    explicit LemmaCheck(std::string line_name) : name(std::move(line_name)) {}

    std::string name;
    long long checks = 0;
    bool passed = true;
    // First failing case, for the diagnostic on exit; empty when passed.
    std::string witness;

    void record(bool ok, const std::string& case_description) {
        ++checks;
        if (!ok && passed) {
            passed = false;
            witness = case_description;
        }
    }
};

struct LemmaReport {
    std::vector<LemmaCheck> lines;

    bool all_passed() const {
        for (const LemmaCheck& c : lines)
            if (!c.passed) return false;
        return true;
    }

    long long total_checks() const {
        long long t = 0;
        for (const LemmaCheck& c : lines) t += c.checks;
        return t;
    }
};

// Runs every identity the decomposition argument leans on, at desk scale:
// slot-shift and shuffle conjugations over random integer matrices (the
// identities are linear in the entries of A, so integer samples are
// conclusive for the verified sizes), permutation determinant parities, and
// the bilinear-form facts. Sizes for the conjugation families range up to
// max_size; the form checks use their natural fixed ranges.
inline LemmaReport run_lemma_suite(long long max_size, std::uint64_t seed,
                                   long long samples = 100) {
    if (max_size < 2) throw OutOfRangeError("run_lemma_suite: max_size must be >= 2");
    if (samples < 1) throw OutOfRangeError("run_lemma_suite: samples must be >= 1");
    SplitMix64 rng(seed);
    LemmaReport report;

    const auto describe = [](const char* dims, long long x, long long y, const IntMat& a) {
        std::ostringstream os;
        os << dims[0] << " = " << x << ", " << dims[1] << " = " << y << ", A = ";
        std::string flat = a.to_string();
        for (char& c : flat)
            if (c == '\n') c = ' ';
        os << flat;
        return os.str();
    };

    {
        LemmaCheck line{"slot-shift conjugation"};
        for (long long n = 1; n <= max_size; ++n)
            for (long long r = 2; r <= max_size; ++r)
                for (long long s = 0; s < samples; ++s) {
                    const IntMat a = random_matrix(rng, static_cast<std::size_t>(n),
                                                   static_cast<std::size_t>(n));
                    line.record(verify_sj_conjugation(n, r, a), describe("nr", n, r, a));
                }
        report.lines.push_back(std::move(line));
    }
    {
        LemmaCheck line{"shuffle conjugation"};
        for (long long m = 1; m <= max_size; ++m)
            for (long long n = 1; n <= max_size; ++n)
                for (long long s = 0; s < samples; ++s) {
                    const IntMat a = random_matrix(rng, static_cast<std::size_t>(m),
                                                   static_cast<std::size_t>(m));
                    line.record(verify_lr_conjugation(m, n, a), describe("mn", m, n, a));
                }
        report.lines.push_back(std::move(line));
    }
    {
        LemmaCheck line{"block permutation determinant parity"};
        for (long long n = 1; n <= max_size; ++n)
            for (long long r = 2; r <= max_size; ++r)
                for (long long j = 1; j <= r - 1; ++j) {
                    const Int expected = n % 2 == 0 ? 1 : -1;
                    std::ostringstream os;
                    os << "n = " << n << ", r = " << r << ", j = " << j;
                    line.record(perm_p_j(n, r, j).det() == expected, os.str());
                }
        report.lines.push_back(std::move(line));
    }
    {
        LemmaCheck line{"tensor transpose and skew-times-skew symmetry"};
        for (std::size_t p = 2; p <= 6; ++p)
            for (std::size_t q = 2; q <= 6; ++q)
                for (long long s = 0; s < samples; ++s) {
                    const IntMat b = random_skew(rng, p);
                    const IntMat bp = random_skew(rng, q);
                    const IntMat t = IntMat::kronecker(b, bp);
                    const bool ok =
                        t.transpose() == IntMat::kronecker(b.transpose(), bp.transpose()) &&
                        symmetry_of(t) == Symmetry::symmetric;
                    line.record(ok, describe("pq", static_cast<long long>(p),
                                             static_cast<long long>(q), b));
                }
        report.lines.push_back(std::move(line));
    }
    {
        LemmaCheck line{"symmetrization subspace dimensions"};
        for (long long k = 1; k <= 6; ++k) {
            std::ostringstream os;
            os << "n = " << k;
            line.record(symmetrization_rank(k, true) == k * (k + 1) / 2, os.str());
            line.record(symmetrization_rank(k, false) == k * (k - 1) / 2, os.str());
        }
        report.lines.push_back(std::move(line));
    }
    return report;
}

} // namespace orthotopy
