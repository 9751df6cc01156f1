#include "sclab/minimize.hpp"

#include <utility>

namespace sclab {
namespace {

// Refinable partition over 0..n-1. Each block occupies a contiguous range of
// `elems`; marked elements are swapped to the front of their block.
class Partition {
public:
    explicit Partition(std::size_t n) : elems_(n), loc_(n), block_of_(n, 0) {
        for (std::size_t i = 0; i < n; ++i) {
            elems_[i] = static_cast<State>(i);
            loc_[i] = i;
        }
        if (n > 0) {
            blocks_.push_back({0, n, 0});
        }
    }

    std::size_t block_count() const { return blocks_.size(); }
    std::size_t block_of(State q) const { return block_of_[q]; }
    std::size_t size(std::size_t b) const { return blocks_[b].end - blocks_[b].begin; }
    std::span<const State> members(std::size_t b) const {
        return {elems_.data() + blocks_[b].begin, size(b)};
    }

    // Returns true when this is the first mark in its block.
    bool mark(State q) {
        Block& blk = blocks_[block_of_[q]];
        const std::size_t pos = loc_[q];
        const std::size_t front = blk.begin + blk.marked;
        if (pos < front) {
            return false;
        }
        std::swap(elems_[pos], elems_[front]);
        loc_[elems_[pos]] = pos;
        loc_[elems_[front]] = front;
        ++blk.marked;
        return blk.marked == 1;
    }

    // Splits the marked prefix of block b into a new block. Returns the new
    // block index, or npos if no element or every element was marked.
    std::size_t split(std::size_t b) {
        Block& blk = blocks_[b];
        const std::size_t marked = blk.marked;
        blk.marked = 0;
        if (marked == 0 || marked == blk.end - blk.begin) {
            return npos;
        }
        const std::size_t fresh = blocks_.size();
        const Block created{blk.begin, blk.begin + marked, 0};
        blk.begin += marked;
        blocks_.push_back(created);
        for (std::size_t i = created.begin; i < created.end; ++i) {
            block_of_[elems_[i]] = fresh;
        }
        return fresh;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    struct Block {
        std::size_t begin;
        std::size_t end;
        std::size_t marked;
    };
    std::vector<State> elems_;
    std::vector<std::size_t> loc_;
    std::vector<std::size_t> block_of_;
    std::vector<Block> blocks_;
};

}  // namespace

Minimized minimize_with_classes(const Dfa& d) {
    const std::size_t k = d.alphabet_size();
    const std::vector<State> reach = reachable_states(d);
    const std::size_t n = reach.size();

    std::vector<State> local(d.state_count(), kUnreachable);
    for (std::size_t i = 0; i < n; ++i) {
        local[reach[i]] = static_cast<State>(i);
    }
    std::vector<State> trans(n * k);
    for (std::size_t i = 0; i < n; ++i) {
        for (Letter a = 0; a < k; ++a) {
            trans[i * k + a] = local[d.delta(reach[i], a)];
        }
    }

    // Predecessor lists, bucketed by (letter, target).
    std::vector<std::size_t> pred_start(k * n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (Letter a = 0; a < k; ++a) {
            ++pred_start[a * n + trans[i * k + a] + 1];
        }
    }
    for (std::size_t i = 1; i < pred_start.size(); ++i) {
        pred_start[i] += pred_start[i - 1];
    }
    std::vector<State> preds(n * k);
    {
        std::vector<std::size_t> fill(pred_start.begin(), pred_start.end() - 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (Letter a = 0; a < k; ++a) {
                preds[fill[a * n + trans[i * k + a]]++] = static_cast<State>(i);
            }
        }
    }

    Partition part(n);
    std::vector<std::size_t> worklist;
    std::vector<char> in_worklist;
    auto enqueue = [&](std::size_t b) {
        if (in_worklist.size() <= b) {
            in_worklist.resize(b + 1, 0);
        }
        if (!in_worklist[b]) {
            in_worklist[b] = 1;
            worklist.push_back(b);
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (d.is_final(reach[i])) {
            part.mark(static_cast<State>(i));
        }
    }
    if (const std::size_t fresh = part.split(0); fresh != Partition::npos) {
        enqueue(part.size(fresh) <= part.size(0) ? fresh : 0);
    }

    std::vector<State> splitter;
    std::vector<std::size_t> touched;
    while (!worklist.empty()) {
        const std::size_t b = worklist.back();
        worklist.pop_back();
        in_worklist[b] = 0;
        const auto mem = part.members(b);
        splitter.assign(mem.begin(), mem.end());

        for (Letter a = 0; a < k; ++a) {
            touched.clear();
            for (State s : splitter) {
                const std::size_t lo = pred_start[a * n + s];
                const std::size_t hi = pred_start[a * n + s + 1];
                for (std::size_t x = lo; x < hi; ++x) {
                    const State p = preds[x];
                    const std::size_t blk = part.block_of(p);
                    if (part.mark(p)) {
                        touched.push_back(blk);
                    }
                }
            }
            for (std::size_t y : touched) {
                const std::size_t z = part.split(y);
                if (z == Partition::npos) {
                    continue;
                }
                if (y < in_worklist.size() && in_worklist[y]) {
                    enqueue(z);
                } else {
                    enqueue(part.size(z) <= part.size(y) ? z : y);
                }
            }
        }
    }

    // Quotient numbered by breadth-first discovery from the initial class.
    const std::size_t blocks = part.block_count();
    std::vector<State> number(blocks, kUnreachable);
    std::vector<std::size_t> order;
    order.reserve(blocks);
    const std::size_t init_block = part.block_of(0);
    number[init_block] = 0;
    order.push_back(init_block);
    std::vector<State> table;
    table.reserve(blocks * k);
    std::vector<State> finals;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::size_t blk = order[head];
        const State rep = part.members(blk)[0];
        if (d.is_final(reach[rep])) {
            finals.push_back(static_cast<State>(head));
        }
        for (Letter a = 0; a < k; ++a) {
            const std::size_t target = part.block_of(trans[rep * k + a]);
            if (number[target] == kUnreachable) {
                number[target] = static_cast<State>(order.size());
                order.push_back(target);
            }
            table.push_back(number[target]);
        }
    }

    std::vector<State> class_of(d.state_count(), kUnreachable);
    for (std::size_t i = 0; i < n; ++i) {
        class_of[reach[i]] = number[part.block_of(static_cast<State>(i))];
    }
    return {Dfa(d.alphabet(), order.size(), 0, std::move(finals), std::move(table)),
            std::move(class_of)};
}

Dfa minimize(const Dfa& d) { return minimize_with_classes(d).dfa; }

std::size_t state_complexity(const Dfa& d) { return minimize(d).state_count(); }

Dfa canonical_accessible(const Dfa& d) {
    const std::vector<State> reach = reachable_states(d);
    std::vector<State> number(d.state_count(), kUnreachable);
    for (std::size_t i = 0; i < reach.size(); ++i) {
        number[reach[i]] = static_cast<State>(i);
    }
    std::vector<State> table;
    table.reserve(reach.size() * d.alphabet_size());
    std::vector<State> finals;
    for (std::size_t i = 0; i < reach.size(); ++i) {
        if (d.is_final(reach[i])) {
            finals.push_back(static_cast<State>(i));
        }
        for (State t : d.row(reach[i])) {
            table.push_back(number[t]);
        }
    }
    return Dfa(d.alphabet(), reach.size(), 0, std::move(finals), std::move(table));
}

bool is_isomorphic(const Dfa& a, const Dfa& b) {
    return minimize(a).same_structure(minimize(b));
}

}  // namespace sclab
