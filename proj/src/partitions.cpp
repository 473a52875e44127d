#include "cubewalks/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubewalks {

SetPartition::SetPartition(int k, std::vector<int> labels)
    : k_(k), r_(0), labels_(std::move(labels)) {
    if (k_ < 1) throw std::invalid_argument("SetPartition: k must be positive");
    if (labels_.size() != std::size_t(2 * k_))
        throw std::invalid_argument("SetPartition: need 2k labels");
    for (int lab : labels_) {
        if (lab < 1 || lab > r_ + 1)
            throw std::invalid_argument("SetPartition: labels must form a restricted growth string");
        r_ = std::max(r_, lab);
    }
}

int SetPartition::block_of(int element) const {
    if (element < 1 || element > 2 * k_)
        throw std::invalid_argument("SetPartition::block_of: element out of range");
    return labels_[std::size_t(element - 1)];
}

std::vector<int> SetPartition::block_sizes() const {
    std::vector<int> sz(static_cast<std::size_t>(r_));
    for (int lab : labels_) ++sz[std::size_t(lab - 1)];
    return sz;
}

bool SetPartition::all_blocks_even() const {
    for (int s : block_sizes())
        if (s % 2 != 0) return false;
    return true;
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    for (int l = 1; l <= 2 * k_; ++l) {
        if (l > 1) os << (l == k_ + 1 ? "|" : ",");
        os << labels_[std::size_t(l - 1)];
    }
    return os.str();
}

ZetaLabels zeta_labels(const SetPartition& d) {
    const int k = d.half_size();
    ZetaLabels z;
    z.bottom.assign(d.labels().begin(), d.labels().begin() + k);
    z.top.assign(d.labels().begin() + k, d.labels().end());
    return z;
}

bool tanabe_condition(const SetPartition& d, int n) {
    if (n < 1) throw std::invalid_argument("tanabe_condition: n must be positive");
    if (d.num_blocks() > n)
        throw std::invalid_argument("tanabe_condition: partition has more than n blocks");
    ZetaLabels z = zeta_labels(d);
    std::vector<int> bottom(static_cast<std::size_t>(d.num_blocks()));
    std::vector<int> top(static_cast<std::size_t>(d.num_blocks()));
    for (int lab : z.bottom) ++bottom[std::size_t(lab - 1)];
    for (int lab : z.top) ++top[std::size_t(lab - 1)];
    for (int j = 0; j < d.num_blocks(); ++j)
        if ((bottom[std::size_t(j)] - top[std::size_t(j)]) % 2 != 0) return false;
    return true;
}

Int stirling2(long m, long j) {
    if (m < 0 || j < 0) return 0;
    if (j > m) return 0;
    if (m == 0) return j == 0 ? 1 : 0;
    // row-by-row recurrence S(i, l) = l S(i-1, l) + S(i-1, l-1)
    std::vector<Int> row(std::size_t(j) + 1);
    row[0] = 1;   // S(0, 0)
    for (long i = 1; i <= m; ++i) {
        for (long l = std::min(i, j); l >= 1; --l)
            row[std::size_t(l)] = Int(l) * row[std::size_t(l)] + row[std::size_t(l - 1)];
        row[0] = 0;   // S(i, 0) = 0 once i >= 1
    }
    return row[std::size_t(j)];
}

Int even_block_count_closed(long k, long r) {
    if (k < 1 || r < 1 || r > k) return 0;
    Int total = 0;
    for (long j = 1; j <= r; ++j) {
        Int term = binomial(2 * r, r - j) * int_pow(Int(j), (unsigned long)(2 * k));
        total += (r - j) % 2 == 0 ? term : -term;
    }
    return exact_div(total, factorial(r) * (Int(1) << unsigned(r - 1)));
}

Int even_block_count_partitionwise(long k, long r) {
    if (k < 1 || r < 1 || r > k) return 0;
    Int total = 0;
    for_each_integer_partition(int(k), int(r), [&](const std::vector<int>& lambda) {
        if (long(lambda.size()) != r) return;
        // multinomial(2k; 2 lambda_1, ..., 2 lambda_r) over the block sizes,
        // divided by l_j! for each repeated part size
        Int ways = 1;
        long rest = 2 * k;
        for (int p : lambda) {
            ways *= binomial(rest, 2 * p);
            rest -= 2 * p;
        }
        Int rep = 1;
        std::size_t i = 0;
        while (i < lambda.size()) {
            std::size_t j = i;
            while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
            rep *= factorial(long(j - i));
            i = j;
        }
        total += exact_div(ways, rep);
    });
    return total;
}

Int dim_Zk_Sn(long k, long n) {
    if (k < 0 || n < 1) throw std::invalid_argument("dim_Zk_Sn: need k >= 0, n >= 1");
    if (k == 0) return 1;
    Int total = 0;
    for (long j = 1; j <= n; ++j) total += stirling2(2 * k, j);
    return total;
}

Int dim_Zk_G21n(long k, long n) {
    if (k < 0 || n < 1) throw std::invalid_argument("dim_Zk_G21n: need k >= 0, n >= 1");
    if (k == 0) return 1;
    Int total = 0;
    for (long r = 1; r <= std::min(k, n); ++r) total += even_block_count_closed(k, r);
    return total;
}

PartitionEnumerator::PartitionEnumerator(int k, int n, bool even_only)
    : k_(k), n_(n), even_only_(even_only), labels_(std::size_t(2 * std::max(k, 1))) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("PartitionEnumerator: need k >= 1, n >= 1");
}

void PartitionEnumerator::place(int pos, int v) {
    if (v == max_used_ + 1) {
        ++max_used_;
        block_size_.push_back(0);
    }
    int& sz = block_size_[std::size_t(v - 1)];
    ++sz;
    odd_blocks_ += sz % 2 == 1 ? 1 : -1;
    labels_[std::size_t(pos)] = v;
}

void PartitionEnumerator::unplace(int pos) {
    const int v = labels_[std::size_t(pos)];
    int& sz = block_size_[std::size_t(v - 1)];
    odd_blocks_ += sz % 2 == 1 ? -1 : 1;
    --sz;
    if (sz == 0) {
        // labels are unplaced in reverse placement order, so an emptied
        // block is always the newest one
        --max_used_;
        block_size_.pop_back();
    }
    labels_[std::size_t(pos)] = 0;
}

bool PartitionEnumerator::advance() {
    const int len = 2 * k_;
    int pos;
    if (!started_) {
        started_ = true;
        pos = 0;
        pending_try_ = 1;
    } else {
        pos = len - 1;
        pending_try_ = labels_[std::size_t(pos)] + 1;
        unplace(pos);
    }
    while (true) {
        if (pos == len) return true;
        const int vmax = std::min(max_used_ + 1, n_);
        bool placed = false;
        for (int v = pending_try_; v <= vmax; ++v) {
            place(pos, v);
            // a block of odd size needs at least one more element, so the
            // remaining slots must cover all odd blocks
            if (even_only_ && odd_blocks_ > len - (pos + 1)) {
                unplace(pos);
                continue;
            }
            placed = true;
            break;
        }
        if (placed) {
            ++pos;
            pending_try_ = 1;
        } else {
            if (pos == 0) return false;
            --pos;
            pending_try_ = labels_[std::size_t(pos)] + 1;
            unplace(pos);
        }
    }
}

std::optional<SetPartition> PartitionEnumerator::next() {
    if (done_) return std::nullopt;
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return SetPartition(k_, labels_);
}

Int count_partitions(int k, int n, bool even_only) {
    PartitionEnumerator e(k, n, even_only);
    Int count = 0;
    while (e.next()) ++count;
    return count;
}

}
