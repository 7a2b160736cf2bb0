#include "covernum/classes.hpp"

#include <charconv>
#include <limits>

#include "covernum/error.hpp"

namespace covernum {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > kSaturated / base) return kSaturated;
    out *= base;
  }
  return out;
}

std::uint64_t parse_number(std::string_view text, std::string_view context) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("expected an integer in '" + std::string(context) + "'");
  }
  return value;
}

}  // namespace

FSpec::FSpec(Form form, std::uint64_t parameter, std::vector<std::uint64_t> table)
    : form_(form), parameter_(parameter), table_(std::move(table)) {
  std::uint64_t previous = 0;
  for (std::uint64_t x = 1; x <= kDomainCap; ++x) {
    if (!defined_at(x)) break;
    const std::uint64_t y = raw(x);
    if (y < previous) throw InvalidArgument("f must be non-decreasing; f(" + std::to_string(x) + ") drops");
    if (y < x) majorizing_ = false;
    previous = y;
  }
  if (form_ == Form::constant) majorizing_ = false;
}

FSpec FSpec::identity() { return FSpec(Form::identity, 0, {}); }
FSpec FSpec::plus(std::uint64_t c) { return FSpec(Form::add_constant, c, {}); }

FSpec FSpec::power(std::uint64_t exponent) {
  if (exponent < 1) throw InvalidArgument("pow exponent must be at least 1");
  return FSpec(Form::power, exponent, {});
}

FSpec FSpec::constant(std::uint64_t k) {
  if (k < 1) throw InvalidArgument("constant f must be at least 1");
  return FSpec(Form::constant, k, {});
}

FSpec FSpec::table(std::vector<std::uint64_t> values) {
  if (values.empty()) throw InvalidArgument("lookup table must define f(1)");
  if (values.size() > kDomainCap) values.resize(kDomainCap);
  return FSpec(Form::table, 0, std::move(values));
}

bool FSpec::defined_at(std::uint64_t x) const noexcept {
  return x == 0 || form_ != Form::table || x <= table_.size();
}

std::uint64_t FSpec::raw(std::uint64_t x) const {
  switch (form_) {
    case Form::identity:
      return x;
    case Form::add_constant:
      return x > kSaturated - parameter_ ? kSaturated : x + parameter_;
    case Form::power:
      return saturating_pow(x, parameter_);
    case Form::constant:
      return parameter_;
    case Form::table:
      return table_[x - 1];
  }
  return 0;
}

std::uint64_t FSpec::operator()(std::uint64_t x) const {
  if (x == 0) return 0;
  if (!defined_at(x)) {
    throw InvalidArgument("f is undefined at " + std::to_string(x) + " (lookup table has " +
                          std::to_string(table_.size()) + " entries)");
  }
  return raw(x);
}

std::string FSpec::to_string() const {
  switch (form_) {
    case Form::identity:
      return "identity";
    case Form::add_constant:
      return "plus:" + std::to_string(parameter_);
    case Form::power:
      return "pow:" + std::to_string(parameter_);
    case Form::constant:
      return "const:" + std::to_string(parameter_);
    case Form::table: {
      std::string out = "table:";
      for (std::size_t i = 0; i < table_.size(); ++i) out += (i ? "," : "") + std::to_string(table_[i]);
      return out;
    }
  }
  return {};
}

FSpec FSpec::parse(std::string_view text) {
  if (text == "identity") return identity();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("unknown chi-binding function '" + std::string(text) + "'");
  const auto head = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  if (head == "plus") return plus(parse_number(arg, text));
  if (head == "pow") return power(parse_number(arg, text));
  if (head == "const") return constant(parse_number(arg, text));
  throw InvalidArgument("unknown chi-binding function '" + std::string(text) + "'");
}

ClassSpec ClassSpec::chi_le(std::uint64_t k) {
  if (k < 1) throw InvalidArgument("chi-le needs k >= 1");
  return ClassSpec(Kind::chi_le, k);
}

ClassSpec ClassSpec::parse(std::string_view text) {
  if (text == "bipartite") return bipartite();
  if (text == "chi-eq-omega") return chi_eq_omega();
  if (text == "perfect") return perfect();
  if (text == "unipolar") return unipolar();
  if (text == "co-unipolar") return co_unipolar();
  if (text == "gsp") return gsp();
  if (text.starts_with("chi-le-f:")) return chi_le_f(FSpec::parse(text.substr(9)));
  if (text.starts_with("chi-le:")) return chi_le(parse_number(text.substr(7), text));
  throw InvalidArgument("unknown graph class '" + std::string(text) + "'");
}

std::string ClassSpec::to_string() const {
  switch (kind_) {
    case Kind::bipartite:
      return "bipartite";
    case Kind::chi_le:
      return "chi-le:" + std::to_string(k_);
    case Kind::chi_le_f:
      return "chi-le-f:" + f_.to_string();
    case Kind::chi_eq_omega:
      return "chi-eq-omega";
    case Kind::perfect:
      return "perfect";
    case Kind::unipolar:
      return "unipolar";
    case Kind::co_unipolar:
      return "co-unipolar";
    case Kind::gsp:
      return "gsp";
  }
  return {};
}

}  // namespace covernum
