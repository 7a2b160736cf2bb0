#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace covernum {

/// Non-decreasing function N -> N used as a chi-binding function, checked
/// eagerly on 1..64. Values saturate at UINT64_MAX.
class FSpec {
 public:
  enum class Form { identity, add_constant, power, constant, table };

  static constexpr std::size_t kDomainCap = 64;

  static FSpec identity();
  static FSpec plus(std::uint64_t c);
  static FSpec power(std::uint64_t exponent);
  static FSpec constant(std::uint64_t k);
  /// values[i] is f(i+1); arguments past the table are undefined.
  static FSpec table(std::vector<std::uint64_t> values);
  /// "identity" | "plus:<c>" | "pow:<a>" | "const:<k>"
  static FSpec parse(std::string_view text);

  Form form() const noexcept { return form_; }
  std::uint64_t parameter() const noexcept { return parameter_; }
  /// f(0) is 0 for every form; throws InvalidArgument where f is undefined.
  std::uint64_t operator()(std::uint64_t x) const;
  bool defined_at(std::uint64_t x) const noexcept;
  /// f(x) >= x on the whole checked domain. False for the constant form.
  bool majorizes_identity() const noexcept { return majorizing_; }
  std::string to_string() const;

  friend bool operator==(const FSpec&, const FSpec&) = default;

 private:
  FSpec(Form form, std::uint64_t parameter, std::vector<std::uint64_t> table);
  std::uint64_t raw(std::uint64_t x) const;

  Form form_ = Form::identity;
  std::uint64_t parameter_ = 0;
  std::vector<std::uint64_t> table_;
  bool majorizing_ = true;
};

class ClassSpec {
 public:
  enum class Kind { bipartite, chi_le, chi_le_f, chi_eq_omega, perfect, unipolar, co_unipolar, gsp };

  static ClassSpec bipartite() { return ClassSpec(Kind::bipartite); }
  static ClassSpec chi_le(std::uint64_t k);
  static ClassSpec chi_le_f(FSpec f) { return ClassSpec(Kind::chi_le_f, 0, std::move(f)); }
  static ClassSpec chi_eq_omega() { return ClassSpec(Kind::chi_eq_omega); }
  static ClassSpec perfect() { return ClassSpec(Kind::perfect); }
  static ClassSpec unipolar() { return ClassSpec(Kind::unipolar); }
  static ClassSpec co_unipolar() { return ClassSpec(Kind::co_unipolar); }
  static ClassSpec gsp() { return ClassSpec(Kind::gsp); }

  /// bipartite | chi-le:<k> | chi-le-f:<fspec> | chi-eq-omega | perfect |
  /// unipolar | co-unipolar | gsp
  static ClassSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t k() const noexcept { return k_; }
  const FSpec& f() const noexcept { return f_; }
  std::string to_string() const;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

 private:
  explicit ClassSpec(Kind kind, std::uint64_t k = 0, FSpec f = FSpec::identity())
      : kind_(kind), k_(k), f_(std::move(f)) {}

  Kind kind_;
  std::uint64_t k_;
  FSpec f_;
};

}  // namespace covernum
