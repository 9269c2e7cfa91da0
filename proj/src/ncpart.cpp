#include "gwp/ncpart.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "gwp/error.hpp"

namespace gwp {

  namespace {
    // Stack discipline on a block labelling: a block may only be revisited
    // when every block opened since its previous element has closed.
    bool labels_noncrossing(std::vector<std::size_t> const& label, std::size_t num_blocks) {
      std::vector<std::size_t> last(num_blocks, 0);
      for (std::size_t i = 0; i < label.size(); ++i) {
        last[label[i]] = i;
      }
      std::vector<bool>        seen(num_blocks, false);
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < label.size(); ++i) {
        std::size_t const b = label[i];
        if (seen[b]) {
          if (open.empty() || open.back() != b) {
            return false;
          }
          if (last[b] == i) {
            open.pop_back();
          }
        } else {
          seen[b] = true;
          if (last[b] != i) {
            open.push_back(b);
          }
        }
      }
      return true;
    }

    void rgs(std::size_t n, std::vector<std::size_t>& label, std::size_t max_label,
             std::vector<NoncrossingPartition>& out) {
      if (label.size() == n) {
        if (!labels_noncrossing(label, max_label)) {
          return;
        }
        std::vector<NoncrossingPartition::Block> blocks(max_label);
        for (std::size_t i = 0; i < n; ++i) {
          blocks[label[i]].push_back(i + 1);
        }
        out.emplace_back(n, std::move(blocks));
        return;
      }
      for (std::size_t b = 0; b <= max_label; ++b) {
        label.push_back(b);
        rgs(n, label, std::max(max_label, b + 1), out);
        label.pop_back();
      }
    }
  }  // namespace

  NoncrossingPartition::NoncrossingPartition(std::size_t n, std::vector<Block> blocks)
      : n_(n), blocks_(std::move(blocks)), label_(n, n) {
    if (n == 0) {
      throw DomainError("noncrossing partitions need n >= 1");
    }
    for (auto& b : blocks_) {
      if (b.empty()) {
        throw DomainError("empty block");
      }
      std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end());
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      for (std::size_t i : blocks_[j]) {
        if (i < 1 || i > n || label_[i - 1] != n) {
          throw DomainError("blocks do not partition {1..n}");
        }
        label_[i - 1] = j;
      }
    }
    if (std::find(label_.begin(), label_.end(), n) != label_.end()) {
      throw DomainError("blocks do not cover {1..n}");
    }
    if (!labels_noncrossing(label_, blocks_.size())) {
      throw DomainError("partition is crossing");
    }
  }

  NoncrossingPartition NoncrossingPartition::one(std::size_t n) {
    Block b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = i + 1;
    }
    return NoncrossingPartition(n, {std::move(b)});
  }

  NoncrossingPartition NoncrossingPartition::zero(std::size_t n) {
    std::vector<Block> blocks;
    for (std::size_t i = 1; i <= n; ++i) {
      blocks.push_back({i});
    }
    return NoncrossingPartition(n, std::move(blocks));
  }

  std::vector<NoncrossingPartition> enumerate_nc(std::size_t n) {
    if (n < 1 || n > nc_max_n) {
      throw DomainError("enumerate_nc: n must lie in [1, " + std::to_string(nc_max_n) + "]");
    }
    std::vector<NoncrossingPartition> out;
    std::vector<std::size_t>          label{0};
    rgs(n, label, 1, out);
    return out;
  }

  bool leq(NoncrossingPartition const& p, NoncrossingPartition const& q) {
    if (p.size() != q.size()) {
      throw DomainError("leq: partitions of different sets");
    }
    for (auto const& b : p.blocks()) {
      std::size_t const target = q.block_of(b.front());
      for (std::size_t i : b) {
        if (q.block_of(i) != target) {
          return false;
        }
      }
    }
    return true;
  }

  long mobius(NoncrossingPartition const& p, NoncrossingPartition const& q) {
    if (!leq(p, q)) {
      throw DomainError("mobius: needs p <= q");
    }
    // The interval [p, q], finer partitions first so that every t is preceded
    // by all s < t.
    std::vector<NoncrossingPartition> interval;
    for (auto& t : enumerate_nc(p.size())) {
      if (leq(p, t) && leq(t, q)) {
        interval.push_back(std::move(t));
      }
    }
    std::stable_sort(interval.begin(), interval.end(), [](auto const& a, auto const& b) {
      return a.blocks().size() > b.blocks().size();
    });
    std::vector<long> mu(interval.size(), 0);
    for (std::size_t i = 0; i < interval.size(); ++i) {
      if (interval[i] == p) {
        mu[i] = 1;
        continue;
      }
      long sum = 0;
      for (std::size_t j = 0; j < i; ++j) {
        if (leq(interval[j], interval[i])) {
          sum += mu[j];
        }
      }
      mu[i] = -sum;
    }
    return mu.back();
  }

  NcTable::NcTable(std::size_t n) : parts_(enumerate_nc(n)) {
    auto const top = NoncrossingPartition::one(n);
    mu_top_.reserve(parts_.size());
    for (auto const& p : parts_) {
      mu_top_.push_back(mobius(p, top));
    }
  }

  NcTable const& NcTable::get(std::size_t n) {
    static std::mutex                                         lock;
    static std::map<std::size_t, std::unique_ptr<NcTable>>    cache;
    std::lock_guard<std::mutex>                               guard(lock);
    auto&                                                     slot = cache[n];
    if (!slot) {
      slot.reset(new NcTable(n));
    }
    return *slot;
  }

  std::string to_string(NoncrossingPartition const& p) {
    std::string out = "{";
    for (std::size_t j = 0; j < p.blocks().size(); ++j) {
      out += j == 0 ? "{" : ",{";
      for (std::size_t k = 0; k < p.blocks()[j].size(); ++k) {
        if (k > 0) {
          out += ',';
        }
        out += std::to_string(p.blocks()[j][k]);
      }
      out += '}';
    }
    return out + "}";
  }

}  // namespace gwp
