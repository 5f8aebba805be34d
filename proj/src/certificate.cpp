#include "semiquad/certificate.hpp"

namespace semiquad {

Certificate Certificate::se_pair(Letter a, Letter b) {
  Certificate c;
  c.type = Type::SePair;
  c.a = a;
  c.b = b;
  return c;
}

Certificate Certificate::zero_sum() {
  Certificate c;
  c.type = Type::ZeroSum;
  return c;
}

Certificate Certificate::none(std::string reason) {
  Certificate c;
  c.reason = std::move(reason);
  return c;
}

namespace {

std::vector<bool> covered_pairs(const Presentation& p) {
  const int n = p.n();
  std::vector<bool> covered(static_cast<std::size_t>(n * n), false);
  for (const auto& r : p.relations()) {
    for (Pair q : r.support()) covered[static_cast<std::size_t>((q.left - 1) * n + q.right - 1)] = true;
  }
  return covered;
}

}  // namespace

std::optional<Certificate> find_se_pair(const Presentation& p) {
  const int n = p.n();
  const auto covered = covered_pairs(p);
  auto hit = [&](int a, int b) { return covered[static_cast<std::size_t>((a - 1) * n + b - 1)]; };
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      if (!hit(a, b) && !hit(b, a)) {
        Certificate c = Certificate::se_pair(static_cast<Letter>(a), static_cast<Letter>(b));
        c.transcript.push_back("x" + std::to_string(a) + "*x" + std::to_string(b) + " and x" +
                               std::to_string(b) + "*x" + std::to_string(a) +
                               " lie outside every support");
        return c;
      }
    }
  }
  return std::nullopt;
}

bool check_zero_sum(const Presentation& p) {
  for (const auto& r : p.relations()) {
    if (r.is_zero()) return false;
  }
  return true;
}

bool within_relation_bound(const Presentation& p) {
  const long long n = p.n(), d = static_cast<long long>(p.size());
  return 4 * d <= n * n + n;
}

Certificate find_certificate(const Presentation& p) {
  if (auto c = find_se_pair(p)) return *c;
  if (check_zero_sum(p)) {
    Certificate c = Certificate::zero_sum();
    c.transcript.push_back("every pair is covered in some orientation");
    c.transcript.push_back("all " + std::to_string(p.size()) +
                           " relations are binomials; coefficients sum to 0");
    return c;
  }
  if (within_relation_bound(p)) {
    return Certificate::none("no certificate although d <= (n^2+n)/4");
  }
  return Certificate::none("bound exceeded, no certificate found");
}

bool certificate_valid(const Certificate& cert, const Presentation& p) {
  switch (cert.type) {
    case Certificate::Type::SePair: {
      if (!p.alphabet().contains(cert.a) || !p.alphabet().contains(cert.b)) return false;
      const Pair ab{cert.a, cert.b}, ba{cert.b, cert.a};
      for (const auto& r : p.relations()) {
        for (Pair q : r.support()) {
          if (q == ab || q == ba) return false;
        }
      }
      return true;
    }
    case Certificate::Type::ZeroSum: return check_zero_sum(p);
    case Certificate::Type::None: return false;
  }
  return false;
}

bool verify_witness(const Certificate& cert, const Presentation& p, std::size_t k,
                    const EngineLimits& limits) {
  if (cert.type != Certificate::Type::SePair) {
    throw UsageError("verify_witness: only SePair certificates carry a witness word");
  }
  if (k == 0) throw UsageError("verify_witness: k must be positive");
  if (!p.alphabet().contains(cert.a) || !p.alphabet().contains(cert.b)) return false;
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < k; ++i) {
    letters.push_back(cert.a);
    letters.push_back(cert.b);
  }
  return !coset_class(Word(std::span<const Letter>(letters)), p, IdealMode::FullM, limits).zero;
}

}  // namespace semiquad
