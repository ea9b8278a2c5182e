#include "bergman/io.hpp"

#include <bit>
#include <cmath>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <ostream>
#include <stdexcept>

namespace bergman::io {

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

namespace {

double parse_real(const std::string& s, const std::string& whole) {
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  const auto res = std::from_chars(first, s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || first == s.data() + s.size()) {
    throw std::invalid_argument("cannot parse complex number '" + whole + "'");
  }
  return v;
}

double parse_imag(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, whole);
}

}  // namespace

cplx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("cannot parse empty complex number");
  const char last = s.back();
  if (last != 'i' && last != 'j') return {parse_real(s, text), 0.0};
  s.pop_back();
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_imag(s, text)};
  return {parse_real(s.substr(0, split), text), parse_imag(s.substr(split), text)};
}

std::string fmt_complex(cplx z) {
  std::string out = fmt(z.real());
  const double im = z.imag();
  if (im >= 0.0 || std::isnan(im)) out += '+';
  return out + fmt(im) + 'i';
}

nlohmann::json to_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw std::invalid_argument("complex value must be a number, a string or [re, im]");
}

nlohmann::json to_json(std::span<const cplx> coeffs) {
  auto arr = nlohmann::json::array();
  for (const cplx c : coeffs) arr.push_back(to_json(c));
  return arr;
}

std::vector<cplx> coeffs_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficient list must be an array");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

Symbol symbol_from_json(const nlohmann::json& j) {
  if (j.contains("family")) {
    const auto& f = j.at("family");
    const cplx gamma = f.contains("gamma") ? complex_from_json(f.at("gamma")) : cplx{1.0, 0.0};
    return SpecialFamilySymbol(f.at("m").get<int>(), complex_from_json(f.value("alpha", nlohmann::json(0.0))),
                               complex_from_json(f.value("beta", nlohmann::json(0.0))), gamma);
  }
  const int m = j.at("m").get<int>();
  auto anti = j.contains("anti") ? coeffs_from_json(j.at("anti")) : std::vector<cplx>{};
  if (anti.empty() && m > 1) anti.assign(static_cast<std::size_t>(m - 1), cplx{});
  auto ana = j.contains("ana") ? coeffs_from_json(j.at("ana")) : std::vector<cplx>{};
  return HarmonicPolySymbol(m, std::move(anti), std::move(ana));
}

nlohmann::json to_json(const Symbol& sym) {
  if (const auto* f = std::get_if<SpecialFamilySymbol>(&sym)) {
    return {{"family", {{"m", f->m}, {"alpha", to_json(f->alpha)}, {"beta", to_json(f->beta)},
                        {"gamma", to_json(f->gamma)}}}};
  }
  const auto& h = std::get<HarmonicPolySymbol>(sym);
  return {{"m", h.m()}, {"anti", to_json(h.anti())}, {"ana", to_json(h.ana())}};
}

void write_complex_binary(std::ostream& os, std::span<const cplx> row_major) {
  static_assert(sizeof(double) == sizeof(std::uint64_t));
  auto put = [&](double x) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
    unsigned char bytes[8];
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<unsigned char>((bits >> (8 * b)) & 0xffU);
    os.write(reinterpret_cast<const char*>(bytes), 8);
  };
  for (const cplx c : row_major) {
    put(c.real());
    put(c.imag());
  }
}

}  // namespace bergman::io
