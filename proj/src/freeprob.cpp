#include "gwp/freeprob.hpp"

#include <algorithm>

#include "gwp/error.hpp"

namespace gwp {

  namespace {
    void check_order(std::size_t n) {
      if (n == 0) {
        throw DomainError("cumulant order must be at least 1");
      }
      if (n > cumulant_max_order) {
        throw DomainError("order " + std::to_string(n) + " exceeds the bound "
                          + std::to_string(cumulant_max_order));
      }
    }

    GeneralElement product(std::span<GeneralElement const> xs) {
      GeneralElement acc = xs.front();
      for (std::size_t i = 1; i < xs.size() && !acc.is_zero(); ++i) {
        acc = multiply(acc, xs[i]);
      }
      return acc;
    }
  }  // namespace

  MomentRequest MomentRequest::trivial(std::vector<RandomVariable> a) {
    MomentRequest req;
    for (auto const& x : a) {
      req.d.push_back(DiagonalElement::unit(*x.graph()));
    }
    req.a = std::move(a);
    return req;
  }

  std::vector<GeneralElement> moment_items(MomentRequest const& req) {
    if (req.a.empty()) {
      throw DomainError("moment of order 0");
    }
    if (req.d.size() != req.a.size()) {
      throw DomainError("moment request: " + std::to_string(req.d.size())
                        + " diagonal multipliers for " + std::to_string(req.a.size())
                        + " variables");
    }
    std::vector<GeneralElement> items;
    items.reserve(req.a.size());
    for (std::size_t i = 0; i < req.a.size(); ++i) {
      require_same_graph(req.a.front().graph(), req.a[i].graph());
      items.push_back(multiply(req.d[i], req.a[i].to_element()));
    }
    return items;
  }

  DiagonalElement moment(MomentRequest const& req) {
    auto items = moment_items(req);
    return moment(items);
  }

  DiagonalElement moment(std::span<GeneralElement const> items) {
    if (items.empty()) {
      throw DomainError("moment of order 0");
    }
    return expectation(product(items));
  }

  DiagonalElement partition_moment(NoncrossingPartition const& p,
                                   std::span<GeneralElement const> items) {
    if (p.size() != items.size()) {
      throw DomainError("partition_moment: partition size differs from item count");
    }
    std::vector<GeneralElement> x(items.begin(), items.end());
    std::vector<std::size_t>    alive(items.size());
    for (std::size_t i = 0; i < alive.size(); ++i) {
      alive[i] = i;
    }
    std::vector<bool> done(p.blocks().size(), false);
    std::size_t       remaining = p.blocks().size();

    while (true) {
      // Find a block occupying consecutive live positions.
      for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        if (done[b]) {
          continue;
        }
        auto const& block = p.blocks()[b];
        auto const  first = std::find(alive.begin(), alive.end(), block.front() - 1);
        auto const  idx   = static_cast<std::size_t>(first - alive.begin());
        if (idx + block.size() > alive.size()) {
          continue;
        }
        bool interval = true;
        for (std::size_t k = 0; k < block.size() && interval; ++k) {
          interval = alive[idx + k] == block[k] - 1;
        }
        if (!interval) {
          continue;
        }

        std::vector<GeneralElement> factors;
        for (std::size_t i : block) {
          factors.push_back(x[i - 1]);
        }
        DiagonalElement value = expectation(product(factors));
        if (--remaining == 0 || value.is_zero()) {
          return value;
        }
        done[b] = true;
        alive.erase(alive.begin() + static_cast<long>(idx),
                    alive.begin() + static_cast<long>(idx + block.size()));
        if (idx < alive.size()) {
          x[alive[idx]] = multiply(value, x[alive[idx]]);
        } else {
          x[alive[idx - 1]] = multiply(x[alive[idx - 1]], value);
        }
        break;
      }
    }
  }

  CumulantReport cumulant(std::span<GeneralElement const> items) {
    check_order(items.size());
    auto const&    table = NcTable::get(items.size());
    CumulantReport report;
    report.partitions = table.partitions();
    report.weights    = table.mobius_to_top();
    report.contributions.reserve(report.partitions.size());
    for (std::size_t i = 0; i < report.partitions.size(); ++i) {
      auto c = partition_moment(report.partitions[i], items);
      report.value += Scalar(report.weights[i]) * c;
      report.contributions.push_back(std::move(c));
    }
    return report;
  }

  CumulantReport cumulant(MomentRequest const& req) {
    check_order(req.a.size());
    auto items = moment_items(req);
    return cumulant(items);
  }

  std::vector<GeneralElement> letter_items(GraphPtr const& g, std::span<Letter const> letters) {
    std::vector<GeneralElement> items;
    items.reserve(letters.size());
    for (auto const& l : letters) {
      items.push_back(GeneralElement::from(g, reduce({l}, Mode::ck)));
    }
    return items;
  }

  bool pi_connected(NoncrossingPartition const& p, GraphPtr const& g,
                    std::span<Letter const> letters) {
    auto items = letter_items(g, letters);
    return !partition_moment(p, items).is_zero();
  }

  MuMultiplier mu_multiplier(GraphPtr const& g, std::span<Letter const> letters) {
    check_order(letters.size());
    auto const&  table = NcTable::get(letters.size());
    auto         items = letter_items(g, letters);
    MuMultiplier out;
    for (std::size_t i = 0; i < table.partitions().size(); ++i) {
      if (!partition_moment(table.partitions()[i], items).is_zero()) {
        out.connected.push_back(table.partitions()[i]);
        out.mu += table.mobius_to_top()[i];
      }
    }
    return out;
  }

  DiagonalElement cumulant_shortcut(GraphPtr const& g, std::span<Letter const> letters) {
    Monomial m{{letters.begin(), letters.end()}, 1};
    if (!star_axis_property(m)) {
      throw DomainError("cumulant_shortcut: monomial lacks the *-axis property");
    }
    auto const mu = mu_multiplier(g, letters).mu;
    return Scalar(mu) * expectation(reduce(m, Mode::ck), *g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Freeness
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Slot s) {
    switch (s) {
      case Slot::a:
        return "a";
      case Slot::a_star:
        return "a*";
      case Slot::b:
        return "b";
      case Slot::b_star:
        return "b*";
    }
    return "?";
  }

  MixedCheck mixed_cumulants_vanish(RandomVariable const& a, RandomVariable const& b,
                                    std::size_t max_order) {
    if (max_order < 2) {
      throw DomainError("mixed cumulant check needs max_order >= 2");
    }
    check_order(max_order);
    require_same_graph(a.graph(), b.graph());
    GeneralElement const slots[] = {a.to_element(), a.adjoint().to_element(), b.to_element(),
                                    b.adjoint().to_element()};

    MixedCheck out;
    for (std::size_t n = 2; n <= max_order; ++n) {
      std::vector<std::size_t> digits(n, 0);
      while (true) {
        bool has_a = false;
        bool has_b = false;
        for (auto d : digits) {
          (d < 2 ? has_a : has_b) = true;
        }
        if (has_a && has_b) {
          std::vector<GeneralElement> items;
          items.reserve(n);
          for (auto d : digits) {
            items.push_back(slots[d]);
          }
          ++out.checked;
          auto k = cumulant(items).value;
          if (!k.is_zero()) {
            out.vanish = false;
            for (auto d : digits) {
              out.witness.push_back(static_cast<Slot>(d));
            }
            out.witness_value = std::move(k);
            return out;
          }
        }
        std::size_t i = n;
        while (i > 0 && ++digits[i - 1] == 4) {
          digits[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
    }
    return out;
  }

  Certificate freeness_certificate(RandomVariable const& a, RandomVariable const& b) {
    auto const fa = a.fp_support();
    auto const fb = b.fp_support();
    return diagram_distinct_sets(fa, fb) ? Certificate::certified : Certificate::unknown;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string structural_hint(RandomVariable const& a) {
      if (a.is_zero()) {
        return "zero";
      }
      auto const fp = a.fp_support();
      if (fp.empty()) {
        return "diagonal";
      }
      if (fp.size() == 1 && a.vertex_support().empty()) {
        return fp.front().is_loop() ? "single loop word" : "single finite-path word";
      }
      return "general";
    }

    bool alternating(std::vector<bool> const& stars) {
      if (stars.size() % 2 != 0) {
        return false;
      }
      for (std::size_t i = 1; i < stars.size(); ++i) {
        if (stars[i] == stars[i - 1]) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Classification classify(RandomVariable const& a, std::size_t max_order) {
    if (max_order < 4 || max_order % 2 != 0) {
      throw DomainError("classify: max_order must be even and at least 4");
    }
    check_order(max_order);

    Classification out;
    out.max_order    = max_order;
    out.self_adjoint = a.is_self_adjoint();
    out.hint         = structural_hint(a);

    auto const x  = a.to_element();
    auto const xs = a.adjoint().to_element();
    for (std::size_t n = 1; n <= max_order; ++n) {
      std::vector<GeneralElement> items(n, x);
      out.trivial_cumulants.push_back(cumulant(items).value);
    }

    bool others_vanish = true;
    bool odd_vanish    = true;
    for (std::size_t n = 1; n <= max_order; ++n) {
      bool const zero = out.trivial_cumulants[n - 1].is_zero();
      if (n != 2 && !zero) {
        others_vanish = false;
      }
      if (n % 2 == 1 && !zero) {
        odd_vanish = false;
      }
    }
    out.semicircular =
        out.self_adjoint && others_vanish && !out.trivial_cumulants[1].is_zero();
    out.even = out.self_adjoint && odd_vanish;

    out.r_diagonal = true;
    for (std::size_t n = 1; n <= max_order && out.r_diagonal; ++n) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n) && out.r_diagonal; ++mask) {
        std::vector<bool>           stars(n);
        std::vector<GeneralElement> items;
        for (std::size_t i = 0; i < n; ++i) {
          stars[i] = ((mask >> (n - 1 - i)) & 1U) != 0;
          items.push_back(stars[i] ? xs : x);
        }
        if (alternating(stars)) {
          continue;
        }
        out.r_diagonal = cumulant(items).value.is_zero();
      }
    }
    return out;
  }

}  // namespace gwp
