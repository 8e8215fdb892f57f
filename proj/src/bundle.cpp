#include "pqech/bundle.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace pqech {

PrequantizationBundle::PrequantizationBundle(Int genus, Int euler) : genus_(genus), euler_(euler) {
  if (genus < 0) throw InputError("genus must be nonnegative, got " + std::to_string(genus));
  if (euler > -1) throw InputError("euler number must be <= -1, got " + std::to_string(euler));
  // 2 - 2g must not overflow, and |e| must be representable.
  if (genus > (INT64_MAX - 2) / 2) throw OverflowError("genus too large");
  if (euler == INT64_MIN) throw OverflowError("euler number too large in magnitude");
}

OrbitSet::OrbitSet(Int m_plus, std::vector<Int> m_hyp, Int m_minus)
    : m_plus_(m_plus), m_hyp_(std::move(m_hyp)), m_minus_(m_minus) {
  if (m_plus_ < 0 || m_minus_ < 0 || std::any_of(m_hyp_.begin(), m_hyp_.end(), [](Int m) { return m < 0; })) {
    throw InputError("orbit multiplicities must be nonnegative");
  }
}

OrbitSet OrbitSet::empty(Int genus) {
  if (genus < 0) throw InputError("genus must be nonnegative");
  return {0, std::vector<Int>(static_cast<std::size_t>(2 * genus), 0), 0};
}

Int OrbitSet::hyperbolic_total() const {
  Int sum = 0;
  for (Int m : m_hyp_) sum = arith::add(sum, m);
  return sum;
}

Int OrbitSet::total() const { return arith::add(m_plus_, hyperbolic_total(), m_minus_); }

OrbitSet operator+(const OrbitSet& a, const OrbitSet& b) {
  if (a.m_hyp_.size() != b.m_hyp_.size()) throw InputError("orbit sets over different hyperbolic alphabets");
  std::vector<Int> hyp(a.m_hyp_.size());
  for (std::size_t i = 0; i < hyp.size(); ++i) hyp[i] = arith::add(a.m_hyp_[i], b.m_hyp_[i]);
  return {arith::add(a.m_plus_, b.m_plus_), std::move(hyp), arith::add(a.m_minus_, b.m_minus_)};
}

std::string OrbitSet::str() const {
  std::ostringstream os;
  bool first = true;
  auto factor = [&](const std::string& name, Int m) {
    if (m == 0) return;
    if (!first) os << ' ';
    first = false;
    os << name;
    if (m != 1) os << '^' << m;
  };
  factor("e+", m_plus_);
  for (std::size_t i = 0; i < m_hyp_.size(); ++i) factor("h" + std::to_string(i + 1), m_hyp_[i]);
  factor("e-", m_minus_);
  return first ? "empty" : os.str();
}

namespace {

Int parse_count(std::string_view s, std::string_view token) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) throw OverflowError("multiplicity out of range in '" + std::string(token) + "'");
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v < 0) {
    throw InputError("malformed orbit factor '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

OrbitSet OrbitSet::parse(std::string_view notation, Int genus) {
  OrbitSet out = empty(genus);
  std::string text(notation);
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "empty") continue;
    std::string_view tok(token);
    std::string_view base = tok;
    Int exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      base = tok.substr(0, caret);
      exponent = parse_count(tok.substr(caret + 1), tok);
    }
    if (base == "e+") {
      out.m_plus_ = arith::add(out.m_plus_, exponent);
    } else if (base == "e-") {
      out.m_minus_ = arith::add(out.m_minus_, exponent);
    } else if (base.size() >= 2 && base.front() == 'h') {
      Int index = parse_count(base.substr(1), tok);
      if (index < 1 || index > 2 * genus) {
        throw InputError("hyperbolic orbit '" + std::string(base) + "' does not exist for genus " +
                         std::to_string(genus));
      }
      auto& slot = out.m_hyp_[static_cast<std::size_t>(index - 1)];
      slot = arith::add(slot, exponent);
    } else {
      throw InputError("unknown orbit '" + std::string(base) + "' in '" + std::string(notation) + "'");
    }
  }
  return out;
}

MorseProfile::MorseProfile(Rational h_min, std::vector<Rational> h_saddle, Rational h_max)
    : h_min_(h_min), h_saddle_(std::move(h_saddle)), h_max_(h_max) {
  if (!(h_min_ < h_max_)) throw InputError("Morse profile needs h_min < h_max");
  for (const auto& s : h_saddle_) {
    if (!(h_min_ < s && s < h_max_)) throw InputError("Morse profile saddle value outside (h_min, h_max)");
  }
}

MorseProfile MorseProfile::standard(Int genus) {
  if (genus < 0) throw InputError("genus must be nonnegative");
  return {Rational(0), std::vector<Rational>(static_cast<std::size_t>(2 * genus), Rational(1, 2)), Rational(1)};
}

GammaResidue gamma_class(const PrequantizationBundle& bundle, const OrbitSet& alpha) {
  return {arith::mod(alpha.total(), bundle.abs_e())};
}

bool is_ech_generator(const OrbitSet& alpha) {
  return std::all_of(alpha.m_hyp().begin(), alpha.m_hyp().end(), [](Int m) { return m <= 1; });
}

ExactAction action_of(const OrbitSet& alpha, const MorseProfile& profile) {
  if (alpha.m_hyp().size() != profile.h_saddle().size()) {
    throw InputError("orbit set and Morse profile have different numbers of saddles");
  }
  Rational correction = Rational(alpha.m_plus()) * profile.h_max() + Rational(alpha.m_minus()) * profile.h_min();
  for (std::size_t i = 0; i < alpha.m_hyp().size(); ++i) {
    if (alpha.m_hyp()[i] != 0) correction += Rational(alpha.m_hyp()[i]) * profile.h_saddle()[i];
  }
  return {arith::mul(2, alpha.total()), correction};
}

bool tie_break_less(const OrbitSet& a, const OrbitSet& b) {
  if (a.m_minus() != b.m_minus()) return a.m_minus() > b.m_minus();
  if (a.m_plus() != b.m_plus()) return a.m_plus() < b.m_plus();
  return a.m_hyp() < b.m_hyp();
}

void check_fits(const PrequantizationBundle& bundle, const OrbitSet& alpha) {
  if (static_cast<Int>(alpha.m_hyp().size()) != bundle.hyperbolic_count()) {
    throw InputError("orbit set has " + std::to_string(alpha.m_hyp().size()) + " hyperbolic slots, bundle has " +
                     std::to_string(bundle.hyperbolic_count()));
  }
}

}  // namespace pqech
