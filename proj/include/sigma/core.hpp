#ifndef SIGMA_CORE_HPP
#define SIGMA_CORE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Defining sequences of sigma_n-k-partitions of K_n and the cyclic
// edge labeling they induce.  Vertices are 0..n-1 understood mod n,
// labels are 0..k-1 understood mod k.

namespace sigma {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct divisibility_error : error { using error::error; };
struct length_error : error { using error::error; };
struct alphabet_error : error { using error::error; };
struct self_loop_error : error { using error::error; };

// Nonnegative remainder.
inline int mod(long long x, int m) {
    int r = static_cast<int>(x % m);
    return r < 0 ? r + m : r;
}

// The sequence a_1..a_{floor(n/2)} over {0..k-1} with a_j = label of the
// edge {0,j}.  It determines the whole partition.  Immutable after
// construction; the constructor validates.
class DefiningSequence {
public:
    DefiningSequence(int k, int n, std::vector<int> a) : k_(k), n_(n), a_(std::move(a)) {
        if (k_ < 2) throw divisibility_error("part count k must be at least 2");
        if (n_ < k_) throw divisibility_error("vertex count n must be at least k");
        if (n_ % k_ != 0)
            throw divisibility_error("k=" + std::to_string(k_) + " does not divide n=" + std::to_string(n_));
        if (k_ % 2 == 0 && n_ % (2 * k_) != 0)
            throw divisibility_error("k=" + std::to_string(k_) + " is even, so 2k must divide n=" + std::to_string(n_));
        if (static_cast<int>(a_.size()) != n_ / 2)
            throw length_error("sequence length " + std::to_string(a_.size()) + " != floor(n/2) = " + std::to_string(n_ / 2));
        for (int x : a_)
            if (x < 0 || x >= k_)
                throw alphabet_error("label " + std::to_string(x) + " outside {0..k-1}");
    }

    int k() const { return k_; }
    int n() const { return n_; }
    int half() const { return n_ / 2; }

    // 1-indexed access, 1 <= i <= floor(n/2).
    int a(int i) const { return a_.at(static_cast<size_t>(i) - 1); }

    const std::vector<int>& labels() const { return a_; }

    // Relabels vertices v -> v+c: a'_i = (a_i - c) mod k.  An accepted
    // ordering tau for the shifted partition pulls back as tau - c.
    DefiningSequence shifted(int c) const {
        std::vector<int> b(a_.size());
        for (size_t i = 0; i < a_.size(); ++i) b[i] = mod(a_[i] - c, k_);
        return {k_, n_, std::move(b)};
    }

    // Shift making a_1 = 0.
    DefiningSequence normalized() const { return shifted(a_[0]); }

    // b_i = (i - 1 - a_i) mod k; an involution.
    DefiningSequence dual() const {
        std::vector<int> b(a_.size());
        for (size_t i = 0; i < a_.size(); ++i)
            b[i] = mod(static_cast<int>(i) + 1 - 1 - a_[i], k_);
        return {k_, n_, std::move(b)};
    }

    bool operator==(const DefiningSequence& o) const {
        return k_ == o.k_ && n_ == o.n_ && a_ == o.a_;
    }
    bool operator!=(const DefiningSequence& o) const { return !(*this == o); }

private:
    int k_;
    int n_;
    std::vector<int> a_;
};

inline DefiningSequence validate_sequence(int k, int n, std::vector<int> a) {
    return {k, n, std::move(a)};
}

// Full edge-label oracle.  ext(i) extends the defining sequence to all
// distances 1..n-1 via ext(i) = (a_{n-i} + i) mod k for i > floor(n/2).
class PartitionLabeling {
public:
    explicit PartitionLabeling(DefiningSequence s) : seq_(std::move(s)), ext_(static_cast<size_t>(seq_.n()), 0) {
        const int n = seq_.n();
        const int k = seq_.k();
        for (int i = 1; i < n; ++i)
            ext_[static_cast<size_t>(i)] = i <= n / 2 ? seq_.a(i) : mod(seq_.a(n - i) + i, k);
        // Symmetry of the induced labeling: ext(d) == ext(n-d) + d (mod k).
        // Guaranteed by the divisibility invariants; checked anyway.
        for (int d = 1; d < n; ++d)
            if (ext_[static_cast<size_t>(d)] != mod(ext_[static_cast<size_t>(n - d)] + d, k))
                throw error("extended labeling is not symmetric (internal)");
    }

    const DefiningSequence& seq() const { return seq_; }
    int n() const { return seq_.n(); }
    int k() const { return seq_.k(); }

    // 1 <= i <= n-1
    int ext(int i) const { return ext_[static_cast<size_t>(i)]; }

    // Label of the edge {u,v}; vertices taken mod n, symmetric in u,v.
    int edge_label(long long u, long long v) const {
        const int n = seq_.n();
        int uu = mod(u, n), vv = mod(v, n);
        if (uu == vv) throw self_loop_error("edge endpoints coincide mod n");
        return mod(ext_[static_cast<size_t>(mod(vv - uu, n))] + uu, seq_.k());
    }

private:
    DefiningSequence seq_;
    std::vector<int> ext_;
};

enum class Step { halt, step, jump };

// Tags index i (1..floor(n/2)-1) by how a_{i+1} relates to a_i.
inline std::vector<Step> classify_steps(const DefiningSequence& s) {
    std::vector<Step> out;
    out.reserve(static_cast<size_t>(s.half() > 0 ? s.half() - 1 : 0));
    for (int i = 1; i < s.half(); ++i) {
        if (s.a(i + 1) == s.a(i))
            out.push_back(Step::halt);
        else if (s.a(i + 1) == mod(s.a(i) + 1, s.k()))
            out.push_back(Step::step);
        else
            out.push_back(Step::jump);
    }
    return out;
}

inline bool has_jump(const DefiningSequence& s) {
    for (Step t : classify_steps(s))
        if (t == Step::jump) return true;
    return false;
}

} // namespace sigma

#endif
