#pragma once

// The lattice NC(n) of noncrossing partitions of {1, ..., n} under refinement,
// and its Moebius function.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gwp {

  // Largest n accepted by enumerate_nc (C_10 = 16796 partitions).
  inline constexpr std::size_t nc_max_n = 10;

  class NoncrossingPartition {
   public:
    using Block = std::vector<std::size_t>;  // 1-based, increasing

    // Validates that the blocks partition {1..n} without crossings and
    // canonicalizes (blocks sorted by minimum). Throws DomainError otherwise.
    NoncrossingPartition(std::size_t n, std::vector<Block> blocks);

    static NoncrossingPartition one(std::size_t n);   // single block
    static NoncrossingPartition zero(std::size_t n);  // all singletons

    std::size_t size() const noexcept { return n_; }
    std::vector<Block> const& blocks() const noexcept { return blocks_; }
    // Block index of element i (1-based).
    std::size_t block_of(std::size_t i) const { return label_.at(i - 1); }

    friend bool operator==(NoncrossingPartition const& a, NoncrossingPartition const& b) {
      return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(NoncrossingPartition const& a, NoncrossingPartition const& b) {
      return a.n_ != b.n_ ? a.n_ < b.n_ : a.blocks_ < b.blocks_;
    }

   private:
    std::size_t              n_;
    std::vector<Block>       blocks_;
    std::vector<std::size_t> label_;
  };

  // All of NC(n) in restricted-growth-string order. Throws DomainError unless
  // 1 <= n <= nc_max_n.
  std::vector<NoncrossingPartition> enumerate_nc(std::size_t n);

  // Refinement: every block of p lies inside a block of q.
  bool leq(NoncrossingPartition const& p, NoncrossingPartition const& q);

  // mu(p, p) = 1, mu(p, q) = -sum_{p <= t < q} mu(p, t). Throws DomainError
  // unless p <= q.
  long mobius(NoncrossingPartition const& p, NoncrossingPartition const& q);

  // NC(n) together with mu(pi, 1_n) for every pi, built once per n and cached
  // (thread-safe).
  class NcTable {
   public:
    static NcTable const& get(std::size_t n);

    std::vector<NoncrossingPartition> const& partitions() const noexcept { return parts_; }
    std::vector<long> const& mobius_to_top() const noexcept { return mu_top_; }

   private:
    explicit NcTable(std::size_t n);

    std::vector<NoncrossingPartition> parts_;
    std::vector<long>                 mu_top_;
  };

  std::string to_string(NoncrossingPartition const& p);

}  // namespace gwp
