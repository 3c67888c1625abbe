#include "nsgps/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <string>

namespace nsgps {

  namespace arith {
    Int add(Int a, Int b) {
      Int r;
      if (__builtin_add_overflow(a, b, &r)) {
        raise(ErrorKind::Overflow,
              std::to_string(a) + " + " + std::to_string(b));
      }
      return r;
    }

    Int sub(Int a, Int b) {
      Int r;
      if (__builtin_sub_overflow(a, b, &r)) {
        raise(ErrorKind::Overflow,
              std::to_string(a) + " - " + std::to_string(b));
      }
      return r;
    }

    Int mul(Int a, Int b) {
      Int r;
      if (__builtin_mul_overflow(a, b, &r)) {
        raise(ErrorKind::Overflow,
              std::to_string(a) + " * " + std::to_string(b));
      }
      return r;
    }

    Int gcd(std::span<Int const> values) noexcept {
      Int g = 0;
      for (Int v : values) {
        g = std::gcd(g, v);
      }
      return g;
    }

    Int mod(Int a, Int m) noexcept {
      Int r = a % m;
      return r < 0 ? r + m : r;
    }

    Int floor_div(Int a, Int b) noexcept {
      Int q = a / b;
      if ((a % b != 0) && (a < 0)) {
        --q;
      }
      return q;
    }

    Int inverse_mod(Int a, Int m) {
      if (m == 1) {
        return 0;
      }
      Int old_r = mod(a, m), r = m;
      Int old_s = 1, s = 0;
      while (r != 0) {
        Int q = old_r / r;
        std::tie(old_r, r) = std::pair(r, old_r - q * r);
        std::tie(old_s, s) = std::pair(s, old_s - q * s);
      }
      if (old_r != 1) {
        raise(ErrorKind::InvalidArgument,
              std::to_string(a) + " is not invertible modulo "
                  + std::to_string(m));
      }
      return mod(old_s, m);
    }
  }  // namespace arith

  std::vector<Int> residue_minima(std::span<Int const> gens, Int modulus) {
    if (modulus <= 0) {
      raise(ErrorKind::InvalidArgument, "modulus must be positive");
    }
    auto const       n = static_cast<std::size_t>(modulus);
    std::vector<Int> dist(n, -1);
    dist[0] = 0;
    using Item = std::pair<Int, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
      auto [d, i] = queue.top();
      queue.pop();
      if (d != dist[i]) {
        continue;
      }
      for (Int g : gens) {
        auto j  = static_cast<std::size_t>((static_cast<Int>(i) + g) % modulus);
        Int  nd = arith::add(d, g);
        if (dist[j] < 0 || nd < dist[j]) {
          dist[j] = nd;
          queue.emplace(nd, j);
        }
      }
    }
    return dist;
  }

  bool in_submonoid(Int x, std::span<Int const> gens) {
    if (x < 0) {
      return false;
    }
    if (x == 0) {
      return true;
    }
    if (gens.empty()) {
      return false;
    }
    Int  m = *std::min_element(gens.begin(), gens.end());
    auto w = residue_minima(gens, m);
    Int  r = w[static_cast<std::size_t>(x % m)];
    return r >= 0 && r <= x;
  }

  std::vector<Int> AperyList::sorted() const {
    std::vector<Int> out(residues);
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace detail {
    struct Memo {
      std::mutex                                    mutex;
      std::map<Int, AperyList>                      apery;
      std::shared_ptr<std::vector<Int> const>       gaps;
      std::shared_ptr<std::vector<Int> const>       pseudo_frobenius;
      std::shared_ptr<std::vector<Int> const>       special_gaps;
    };

    namespace {
      // Stores <value> unless another thread got there first; both are equal.
      std::vector<Int> const& publish(Memo&                                     memo,
                                      std::shared_ptr<std::vector<Int> const>& slot,
                                      std::vector<Int>&&                       value) {
        std::lock_guard lock(memo.mutex);
        if (!slot) {
          slot = std::make_shared<std::vector<Int> const>(std::move(value));
        }
        return *slot;
      }

      std::vector<Int> const* peek(Memo&                                           memo,
                                   std::shared_ptr<std::vector<Int> const> const& slot) {
        std::lock_guard lock(memo.mutex);
        return slot ? slot.get() : nullptr;
      }
    }  // namespace
  }  // namespace detail

  Semigroup::Semigroup() : _memo(std::make_shared<detail::Memo>()) {}

  bool Semigroup::contains(Int x) const noexcept {
    if (x < 0) {
      return false;
    }
    if (x >= _conductor) {
      return true;
    }
    Int m = multiplicity();
    return x >= _apery_m[static_cast<std::size_t>(x % m)];
  }

  std::vector<Int> Semigroup::small_elements() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < _small.size(); ++i) {
      if (_small[i]) {
        out.push_back(static_cast<Int>(i));
      }
    }
    return out;
  }

  AperyList const& Semigroup::apery(Int n) const {
    if (n <= 0 || !contains(n)) {
      raise(ErrorKind::NotMember,
            std::to_string(n) + " is not a nonzero element of the semigroup");
    }
    {
      std::lock_guard lock(_memo->mutex);
      auto            it = _memo->apery.find(n);
      if (it != _memo->apery.end()) {
        return it->second;
      }
    }
    AperyList list;
    list.modulus = n;
    if (n == multiplicity()) {
      list.residues = _apery_m;
    } else {
      list.residues = residue_minima(_generators, n);
    }
    std::lock_guard lock(_memo->mutex);
    return _memo->apery.try_emplace(n, std::move(list)).first->second;
  }

  std::vector<Int> const& Semigroup::gaps() const {
    if (auto const* cached = detail::peek(*_memo, _memo->gaps)) {
      return *cached;
    }
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(_genus));
    for (Int x = 1; x < _conductor; ++x) {
      if (!_small[static_cast<std::size_t>(x)]) {
        out.push_back(x);
      }
    }
    return detail::publish(*_memo, _memo->gaps, std::move(out));
  }

  std::vector<Int> const& Semigroup::pseudo_frobenius() const {
    if (auto const* cached = detail::peek(*_memo, _memo->pseudo_frobenius)) {
      return *cached;
    }
    std::vector<Int> out;
    if (!is_whole()) {
      out = pseudo_frobenius_from_apery(*this, multiplicity());
    }
    return detail::publish(*_memo, _memo->pseudo_frobenius, std::move(out));
  }

  std::vector<Int> const& Semigroup::special_gaps() const {
    if (auto const* cached = detail::peek(*_memo, _memo->special_gaps)) {
      return *cached;
    }
    std::vector<Int> out;
    for (Int x : pseudo_frobenius()) {
      if (contains(2 * x)) {
        out.push_back(x);
      }
    }
    return detail::publish(*_memo, _memo->special_gaps, std::move(out));
  }

  Semigroup from_generators(std::span<Int const> input) {
    if (input.empty()) {
      raise(ErrorKind::EmptyInput, "no generators given");
    }
    for (Int g : input) {
      if (g <= 0) {
        raise(ErrorKind::InvalidArgument,
              "generators must be positive, got " + std::to_string(g));
      }
    }
    if (Int d = arith::gcd(input); d != 1) {
      raise(ErrorKind::NotNumerical,
            "generators have gcd " + std::to_string(d));
    }
    std::vector<Int> gens(input.begin(), input.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Semigroup s;
    if (gens.front() == 1) {
      return s;
    }
    Int const m = gens.front();
    auto      w = residue_minima(gens, m);
    Int const max_w = *std::max_element(w.begin(), w.end());
    Int const conductor = max_w - m + 1;
    if (conductor > kMaxConductor) {
      raise(ErrorKind::ResourceLimit,
            "conductor " + std::to_string(conductor) + " exceeds "
                + std::to_string(kMaxConductor));
    }

    auto member = [&](Int x) {
      return x >= 0 && x >= w[static_cast<std::size_t>(x % m)];
    };

    // Minimal generators: m together with the elements of Ap(S, m) that are
    // not a sum of two nonzero elements of S.
    std::vector<Int> nonzero_apery;
    for (Int v : w) {
      if (v != 0) {
        nonzero_apery.push_back(v);
      }
    }
    std::sort(nonzero_apery.begin(), nonzero_apery.end());
    std::vector<Int> minimal{m};
    for (std::size_t k = 1; k < gens.size(); ++k) {
      Int g = gens[k];
      if (w[static_cast<std::size_t>(g % m)] != g) {
        continue;
      }
      bool decomposable = false;
      for (Int a : nonzero_apery) {
        if (a >= g) {
          break;
        }
        if (member(g - a)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) {
        minimal.push_back(g);
      }
    }

    Int sum = 0;
    for (Int v : w) {
      sum = arith::add(sum, v);
    }
    // Selmer: g(S) = (sum Ap(S,m) - m(m-1)/2) / m.
    Int const genus = (sum - arith::mul(m, m - 1) / 2) / m;

    s._generators = std::move(minimal);
    s._conductor  = conductor;
    s._genus      = genus;
    s._small.assign(static_cast<std::size_t>(conductor) + 1, false);
    for (Int x = 0; x <= conductor; ++x) {
      s._small[static_cast<std::size_t>(x)] = member(x);
    }
    s._apery_m = std::move(w);
    return s;
  }

  Semigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<Int const>(gens.begin(), gens.size()));
  }

  std::pair<Int, Semigroup> from_generators_reduced(std::span<Int const> gens) {
    if (gens.empty()) {
      raise(ErrorKind::EmptyInput, "no generators given");
    }
    for (Int g : gens) {
      if (g <= 0) {
        raise(ErrorKind::InvalidArgument,
              "generators must be positive, got " + std::to_string(g));
      }
    }
    Int const        d = arith::gcd(gens);
    std::vector<Int> scaled;
    scaled.reserve(gens.size());
    for (Int g : gens) {
      scaled.push_back(g / d);
    }
    return {d, from_generators(scaled)};
  }

  AperyList apery(Semigroup const& s, Int n) {
    return s.apery(n);
  }

  std::vector<Int> apery_wrt_integer(Semigroup const& s, Int n) {
    if (n <= 0) {
      raise(ErrorKind::InvalidArgument, "apery_wrt_integer needs n >= 1");
    }
    std::vector<Int> out;
    // Past conductor + n every x has x - n in S.
    Int const bound = arith::add(s.conductor(), n);
    for (Int x = 0; x < bound; ++x) {
      if (s.contains(x) && !s.contains(x - n)) {
        out.push_back(x);
      }
    }
    return out;
  }

  NotableElements notable_elements(Semigroup const& s) {
    NotableElements out;
    out.frobenius      = s.frobenius();
    out.conductor      = s.conductor();
    out.genus          = s.genus();
    out.gaps           = s.gaps();
    out.multiplicity   = s.multiplicity();
    out.embedding_dim  = static_cast<Int>(s.embedding_dimension());
    out.sporadic_count = s.conductor() - s.genus();
    return out;
  }

  std::pair<Int, Int> selmer(Semigroup const& s, Int n) {
    auto const& ap  = s.apery(n);
    Int         max = 0, sum = 0;
    for (Int v : ap.residues) {
      max = std::max(max, v);
      sum = arith::add(sum, v);
    }
    Int const numerator = sum - arith::mul(n, n - 1) / 2;
    if (numerator % n != 0) {
      raise(ErrorKind::InvariantViolation,
            "Selmer genus formula is not integral for n = " + std::to_string(n));
    }
    return {max - n, numerator / n};
  }

  JohnsonReduction johnson_reduce(Semigroup const& s) {
    if (s.embedding_dimension() < 2) {
      raise(ErrorKind::Underdetermined,
            "Johnson reduction needs at least two generators");
    }
    return johnson_reduce(s, s.generators().back());
  }

  JohnsonReduction johnson_reduce(Semigroup const& s, Int pivot) {
    auto gens = s.generators();
    if (gens.size() < 2) {
      raise(ErrorKind::Underdetermined,
            "Johnson reduction needs at least two generators");
    }
    if (std::find(gens.begin(), gens.end(), pivot) == gens.end()) {
      raise(ErrorKind::NotMinimalGenerator,
            std::to_string(pivot) + " is not a minimal generator");
    }
    std::vector<Int> rest;
    for (Int g : gens) {
      if (g != pivot) {
        rest.push_back(g);
      }
    }
    Int const        d = arith::gcd(rest);
    std::vector<Int> reduced_gens;
    for (Int g : rest) {
      reduced_gens.push_back(g / d);
    }
    reduced_gens.push_back(pivot);
    JohnsonReduction out{d, from_generators(reduced_gens)};

    Int const ft = out.reduced.frobenius();
    Int const gt = out.reduced.genus();
    if (s.frobenius()
        != arith::add(arith::mul(d, ft), arith::mul(d - 1, pivot))) {
      raise(ErrorKind::InvariantViolation, "Johnson Frobenius formula failed");
    }
    if (s.genus()
        != arith::add(arith::mul(d, gt), arith::mul(d - 1, pivot - 1) / 2)) {
      raise(ErrorKind::InvariantViolation, "Johnson genus formula failed");
    }
    return out;
  }

  std::vector<Int> pseudo_frobenius_from_apery(Semigroup const& s, Int n) {
    if (s.is_whole()) {
      return {};
    }
    auto const&      ap = s.apery(n);
    std::vector<Int> out;
    for (Int w : ap.residues) {
      // w is maximal in Ap(S, n) w.r.t. <=_S iff w + g - n in S for every
      // minimal generator g.
      bool maximal = true;
      for (Int g : s.generators()) {
        if (!s.contains(w + g - n)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        out.push_back(w - n);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool wilf_check(Semigroup const& s) {
    Int const f1 = s.frobenius() + 1;
    Int const n  = s.conductor() - s.genus();
    Int const e  = static_cast<Int>(s.embedding_dimension());
    if (f1 > arith::mul(type(s) + 1, n)) {
      raise(ErrorKind::InvariantViolation,
            "F(S) + 1 <= (t(S) + 1) n(S) failed");
    }
    return f1 <= arith::mul(e, n);
  }

}  // namespace nsgps
