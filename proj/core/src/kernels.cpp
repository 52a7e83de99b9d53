#include "lpsq/kernels.hpp"

#include <stdexcept>

namespace lpsq {

TrigPoly fejer(int n) {
  if (n < 0) throw std::invalid_argument("fejer: order must be >= 0");
  TrigPolyBuilder b(1);
  b.reserve(static_cast<std::size_t>(2 * n + 1));
  for (int32_t j = -n; j <= n; ++j) {
    const double c = 1.0 - static_cast<double>(std::abs(j)) / (n + 1.0);
    b.add(std::span<const int32_t>(&j, 1), cd{c, 0.0});
  }
  return std::move(b).build();
}

TrigPoly vallee_poussin(int N) {
  if (N < 1) throw std::invalid_argument("vallee_poussin: N must be >= 1");
  if (N > 28) throw std::invalid_argument("vallee_poussin: N too large for int32 frequencies");
  const int32_t T = int32_t{1} << N;
  TrigPolyBuilder b(1);
  b.reserve(static_cast<std::size_t>(4 * T + 1));
  for (int32_t j = -2 * T; j <= 2 * T; ++j) {
    const int32_t aj = std::abs(j);
    const double c = aj <= T ? 1.0 : 2.0 - static_cast<double>(aj) / T;
    if (c != 0.0) b.add(std::span<const int32_t>(&j, 1), cd{c, 0.0});
  }
  return std::move(b).build();
}

TrigPoly pichorides_fn(int N, int d) {
  if (N < 1) throw std::invalid_argument("pichorides_fn: N must be >= 1");
  if (d < 1) throw std::invalid_argument("pichorides_fn: d must be >= 1");
  const int32_t shift = int32_t{1} << (N + 1);
  const TrigPoly f1 = modulate(vallee_poussin(N), std::span<const int32_t>(&shift, 1));
  if (d == 1) return f1;
  std::vector<TrigPoly> factors(static_cast<std::size_t>(d), f1);
  return tensor_product(factors);
}

TrigPoly dirichlet_block(int N) {
  if (N < 1) throw std::invalid_argument("dirichlet_block: N must be >= 1");
  if (N > 29) throw std::invalid_argument("dirichlet_block: N too large for int32 frequencies");
  TrigPolyBuilder b(1);
  const int32_t lo = int32_t{1} << N;
  const int32_t hi = (int32_t{1} << (N + 1)) - 1;
  b.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int32_t n = lo; n <= hi; ++n) b.add(std::span<const int32_t>(&n, 1), cd{1.0, 0.0});
  return std::move(b).build();
}

TrigPoly diag_embed(const TrigPoly& F, int d) {
  if (F.dim() != 1) throw std::invalid_argument("diag_embed: F must be 1-D");
  if (d < 1) throw std::invalid_argument("diag_embed: d must be >= 1");
  TrigPolyBuilder b(d);
  b.reserve(F.term_count());
  std::vector<int32_t> n(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < F.term_count(); ++i) {
    std::fill(n.begin(), n.end(), F.exponent(i)[0]);
    b.add(n, F.amplitude(i));
  }
  return std::move(b).build();
}

FamilyName family_from_string(const std::string& s) {
  if (s == "fejer") return FamilyName::fejer;
  if (s == "vallee_poussin") return FamilyName::vallee_poussin;
  if (s == "pichorides") return FamilyName::pichorides;
  if (s == "zygmund_tensor") return FamilyName::zygmund_tensor;
  if (s == "diagonal") return FamilyName::diagonal;
  throw std::invalid_argument("unknown family: " + s);
}

std::string family_to_string(FamilyName name) {
  switch (name) {
    case FamilyName::fejer: return "fejer";
    case FamilyName::vallee_poussin: return "vallee_poussin";
    case FamilyName::pichorides: return "pichorides";
    case FamilyName::zygmund_tensor: return "zygmund_tensor";
    case FamilyName::diagonal: return "diagonal";
  }
  throw std::logic_error("family_to_string: bad enum");
}

TrigPoly make_family(const FamilySpec& spec) {
  if (spec.N < 1) throw std::invalid_argument("make_family: N must be >= 1");
  if (spec.d < 1) throw std::invalid_argument("make_family: d must be >= 1");
  switch (spec.name) {
    case FamilyName::fejer:
      if (spec.d != 1) throw std::invalid_argument("make_family: fejer is 1-D");
      return fejer(spec.N);
    case FamilyName::vallee_poussin:
      if (spec.d != 1) throw std::invalid_argument("make_family: vallee_poussin is 1-D");
      return vallee_poussin(spec.N);
    case FamilyName::pichorides:
    case FamilyName::zygmund_tensor:
      return pichorides_fn(spec.N, spec.d);
    case FamilyName::diagonal:
      return diag_embed(pichorides_fn(spec.N, 1), spec.d);
  }
  throw std::logic_error("make_family: bad enum");
}

int64_t family_max_abs_freq(FamilyName name, int N) {
  switch (name) {
    case FamilyName::fejer:
      return N;
    case FamilyName::vallee_poussin:
      return (int64_t{1} << (N + 1)) - 1;  // trapezoid endpoints carry zero
    case FamilyName::pichorides:
    case FamilyName::zygmund_tensor:
    case FamilyName::diagonal:
      return (int64_t{1} << (N + 2)) - 1;
  }
  throw std::logic_error("family_max_abs_freq: bad enum");
}

}  // namespace lpsq
