#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubewalks/bigint.hpp"
#include "cubewalks/errors.hpp"

namespace cubewalks {

// Set partition of [1, 2k] in canonical block order: block 1 contains 1,
// and block j+1 contains the smallest element outside blocks 1..j.  The
// label sequence block_of(1), ..., block_of(2k) is then a restricted
// growth string.
class SetPartition {
public:
    // labels[l - 1] is the block of element l; validated as a restricted
    // growth string
    SetPartition(int k, std::vector<int> labels);

    int half_size() const { return k_; }
    int size() const { return 2 * k_; }
    int num_blocks() const { return r_; }
    int block_of(int element) const;
    const std::vector<int>& labels() const { return labels_; }

    // sizes of blocks 1..r
    std::vector<int> block_sizes() const;
    bool all_blocks_even() const;

    // bottom row then top row, e.g. "1,2,3,1,4|2,4,2,2,3"
    std::string to_string() const;

    bool operator==(const SetPartition&) const = default;

private:
    int k_, r_;
    std::vector<int> labels_;
};

// block labels of the bottom row (elements 1..k) and the top row
// (elements k+1..2k)
struct ZetaLabels {
    std::vector<int> bottom;
    std::vector<int> top;
};
ZetaLabels zeta_labels(const SetPartition& d);

// each block label occurs with the same parity in the bottom and top rows
bool tanabe_condition(const SetPartition& d, int n);

// Stirling number of the second kind S(m, j)
Int stirling2(long m, long j);

// T(k, r): partitions of a 2k-set into r blocks of even size, by the
// inclusion-exclusion closed form
Int even_block_count_closed(long k, long r);

// the same count, summed over integer partitions of k
Int even_block_count_partitionwise(long k, long r);

Int dim_Zk_Sn(long k, long n);
Int dim_Zk_G21n(long k, long n);

// Lazy stream over P(k, n) -- set partitions of [1, 2k] with at most n
// blocks -- in lexicographic restricted-growth-string order; even_only
// restricts to all-even block sizes with pruning during the scan.
class PartitionEnumerator {
public:
    PartitionEnumerator(int k, int n, bool even_only);
    std::optional<SetPartition> next();

private:
    bool advance();
    void place(int pos, int v);
    void unplace(int pos);

    int k_, n_;
    bool even_only_;
    bool started_ = false;
    bool done_ = false;
    int pending_try_ = 1;
    std::vector<int> labels_;
    std::vector<int> block_size_;
    int max_used_ = 0;
    int odd_blocks_ = 0;
};

// number of partitions the enumerator would yield, by streaming it
Int count_partitions(int k, int n, bool even_only);

// Integer partitions of k into at most max_parts positive parts, as weakly
// decreasing vectors; f receives each one.  k = 0 yields the empty
// partition.
template <typename F>
void for_each_integer_partition(int k, int max_parts, F&& f) {
    std::vector<int> parts;
    if (k == 0) {
        f(std::as_const(parts));
        return;
    }
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            f(std::as_const(parts));
            return;
        }
        if (int(parts.size()) == max_parts) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, k, k);
}

}
