#include "pmsched/vectorset.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace pmsched {

namespace {

constexpr std::size_t kMaxBits = std::size_t(1) << 32;  // 512 MiB of index space

std::size_t checked_capacity(int dim, std::int64_t bound) {
  if (dim < 1) throw std::invalid_argument("VectorSet dimension must be >= 1");
  if (bound < 0) throw std::invalid_argument("VectorSet bound must be >= 0");
  std::size_t cap = 1;
  for (int t = 0; t < dim; ++t) {
    if (__builtin_mul_overflow(cap, std::size_t(bound) + 1, &cap) || cap > kMaxBits)
      throw std::length_error("VectorSet index space too large");
  }
  return cap;
}

void shifted_or(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                std::size_t shift, std::size_t src_bits) {
  const std::size_t word = shift / 64, bit = shift % 64;
  const std::size_t src_words = (src_bits + 63) / 64;
  if (bit == 0) {
    for (std::size_t i = 0; i < src_words; ++i) dst[i + word] |= src[i];
  } else {
    for (std::size_t i = 0; i < src_words; ++i) {
      dst[i + word] |= src[i] << bit;
      dst[i + word + 1] |= src[i] >> (64 - bit);
    }
  }
}

void fft(std::vector<std::complex<double>>& a, bool invert) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2 * M_PI / double(len) * (invert ? -1 : 1);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1);
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j], v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (invert)
    for (auto& x : a) x /= double(n);
}

}  // namespace

VectorSet::VectorSet(int dim, std::int64_t bound)
    : dim_(dim), bound_(bound), capacity_(checked_capacity(dim, bound)),
      bits_((capacity_ + 63) / 64, 0) {}

std::size_t VectorSet::index_of(std::span<const std::int64_t> point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("point dimension mismatch");
  std::size_t idx = 0, stride = 1;
  for (int t = 0; t < dim_; ++t) {
    if (point[std::size_t(t)] < 0 || point[std::size_t(t)] > bound_)
      throw std::out_of_range("point coordinate outside [0, bound]");
    idx += std::size_t(point[std::size_t(t)]) * stride;
    stride *= std::size_t(bound_) + 1;
  }
  return idx;
}

std::vector<std::int64_t> VectorSet::point_at(std::size_t idx) const {
  std::vector<std::int64_t> p(static_cast<std::size_t>(dim_));
  for (int t = 0; t < dim_; ++t) {
    p[std::size_t(t)] = std::int64_t(idx % (std::size_t(bound_) + 1));
    idx /= std::size_t(bound_) + 1;
  }
  return p;
}

void VectorSet::set_index(std::size_t idx) { bits_[idx / 64] |= std::uint64_t(1) << (idx % 64); }

bool VectorSet::test_index(std::size_t idx) const {
  return (bits_[idx / 64] >> (idx % 64)) & 1;
}

void VectorSet::insert(std::span<const std::int64_t> point) { set_index(index_of(point)); }

bool VectorSet::contains(std::span<const std::int64_t> point) const {
  return test_index(index_of(point));
}

std::size_t VectorSet::size() const {
  std::size_t count = 0;
  for (std::uint64_t w : bits_) count += std::size_t(__builtin_popcountll(w));
  return count;
}

std::vector<std::vector<std::int64_t>> VectorSet::points() const {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
    std::uint64_t w = bits_[wi];
    while (w) {
      const int b = __builtin_ctzll(w);
      w &= w - 1;
      out.push_back(point_at(wi * 64 + std::size_t(b)));
    }
  }
  return out;
}

VectorSet VectorSet::widened(std::int64_t new_bound) const {
  if (new_bound < bound_) throw std::invalid_argument("widened bound smaller than current");
  VectorSet out(dim_, new_bound);
  for (const auto& p : points()) out.insert(p);
  return out;
}

VectorSet minkowski_sum(const VectorSet& x, const VectorSet& y, ConvolutionBackend backend) {
  if (x.dim() != y.dim()) throw std::invalid_argument("Minkowski sum dimension mismatch");
  const std::int64_t out_bound = x.bound() + y.bound();
  VectorSet out(x.dim(), out_bound);
  if (x.empty() || y.empty()) return out;

  // Re-encode with the widened stride so coordinate carries cannot collide.
  VectorSet xw = x.widened(out_bound);
  VectorSet yw = y.widened(out_bound);

  if (backend == ConvolutionBackend::Bitset) {
    std::vector<std::uint64_t> res((2 * out.capacity() + 63) / 64 + 1, 0);
    const auto& xb = xw.words();
    for (std::size_t wi = 0; wi < xb.size(); ++wi) {
      std::uint64_t w = xb[wi];
      while (w) {
        const int b = __builtin_ctzll(w);
        w &= w - 1;
        shifted_or(res, yw.words(), wi * 64 + std::size_t(b), yw.capacity());
      }
    }
    for (std::size_t idx = 0; idx < out.capacity(); ++idx)
      if ((res[idx / 64] >> (idx % 64)) & 1) out.set_index(idx);
  } else {
    std::size_t need = 2 * out.capacity();
    std::size_t sz = 1;
    while (sz < need) sz <<= 1;
    std::vector<std::complex<double>> fa(sz), fb(sz);
    for (std::size_t idx = 0; idx < xw.capacity(); ++idx)
      if (xw.test_index(idx)) fa[idx] = 1.0;
    for (std::size_t idx = 0; idx < yw.capacity(); ++idx)
      if (yw.test_index(idx)) fb[idx] = 1.0;
    fft(fa, false);
    fft(fb, false);
    for (std::size_t i = 0; i < sz; ++i) fa[i] *= fb[i];
    fft(fa, true);
    for (std::size_t idx = 0; idx < out.capacity(); ++idx) {
      // Saturate before thresholding: any genuinely attainable index has an
      // exact coefficient >= 1; round-off keeps it well above 0.5.
      double coeff = std::min(fa[idx].real(), 2.0);
      if (coeff > 0.5) out.set_index(idx);
    }
  }
  return out;
}

VectorSet load_distribution(std::span<const Job> jobs, int d, ConvolutionBackend backend) {
  if (d < 1) throw std::invalid_argument("load_distribution requires d >= 1");
  if (jobs.empty()) {
    VectorSet base(d, 0);
    base.insert(std::vector<std::int64_t>(std::size_t(d), 0));
    return base;
  }
  if (jobs.size() == 1) {
    VectorSet base(d, jobs[0].p);
    std::vector<std::int64_t> p(std::size_t(d), 0);
    base.insert(p);
    for (int t = 0; t < d; ++t) {
      p[std::size_t(t)] = jobs[0].p;
      base.insert(p);
      p[std::size_t(t)] = 0;
    }
    return base;
  }
  const std::size_t mid = jobs.size() / 2;
  VectorSet left = load_distribution(jobs.subspan(0, mid), d, backend);
  VectorSet right = load_distribution(jobs.subspan(mid), d, backend);
  return minkowski_sum(left, right, backend);
}

ClassDistributions class_distributions(const Instance& inst, const EfficiencyClasses& classes,
                                       ConvolutionBackend backend) {
  ClassDistributions out;
  const int m = inst.machines;
  for (const EfficiencyClass& cls : classes.classes) {
    std::vector<Job> members;
    members.reserve(cls.members.size());
    for (int id : cls.members) members.push_back(inst.jobs[std::size_t(id)]);

    std::vector<std::vector<std::int64_t>> vectors;
    if (m == 1) {
      vectors.push_back({cls.load});
    } else {
      VectorSet partial = load_distribution(members, m - 1, backend);
      for (auto& p : partial.points()) {
        std::int64_t used = 0;
        for (std::int64_t v : p) used += v;
        const std::int64_t residual = cls.load - used;
        if (residual < 0) continue;  // cannot happen for disjoint subsets; kept as a guard
        p.push_back(residual);
        vectors.push_back(std::move(p));
      }
    }
    out.per_class.push_back(std::move(vectors));
  }
  return out;
}

}  // namespace pmsched
