#include "perminv/report_io.hpp"

#include <json.hpp>
#include <sstream>

namespace perminv {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ordered_json series_json(const RationalFunction& rf) {
  const IntegerForm f = to_integer_form(rf);
  ordered_json num = ordered_json::array();
  ordered_json den = ordered_json::array();
  for (const auto& c : f.numerator) num.push_back(integer(c));
  for (const auto& c : f.denominator) den.push_back(integer(c));
  return ordered_json{{"num", num}, {"den", den}};
}

ordered_json window_json(const GradedWindow& w) {
  return ordered_json{{"lo", w.lo}, {"hi", w.hi}, {"dims", w.dims}};
}

std::string window_text(const GradedWindow& w) {
  std::ostringstream os;
  // Highest degree first, which is where the interesting part sits.
  for (int j = w.hi; j >= w.lo; --j) {
    os << (j == w.hi ? "" : " ") << j << ":" << w.at(j);
  }
  return os.str();
}

std::string char_label(FieldChar ch) { return std::to_string(ch.p()); }

}  // namespace

std::string report_to_json(const InvariantReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["order"] = r.order;
  j["transpositions"] = r.transpositions.size();
  ordered_json cycles = ordered_json::array();
  for (const auto& t : r.transpositions) cycles.push_back(t.to_cycle_string());
  j["transposition_cycles"] = cycles;
  j["partition"] = r.partition;
  j["index_G_over_N"] = r.index_g_n;
  j["hilb_invariants"] = series_json(r.hilb_invariants);
  j["hilb_invariants_degree"] = r.hilb_invariants_degree;
  j["hilb_sign_semiinvariants"] = series_json(r.hilb_sign_semi_invariants);
  j["depth"] = r.depth;

  ordered_json per_char = ordered_json::object();
  for (const auto& cr : r.per_char) {
    ordered_json c;
    c["a_invariant"] = cr.a_invariant;
    c["quasi_gorenstein"] = cr.quasi_gorenstein;
    c["gorenstein"] = cr.gorenstein ? ordered_json(*cr.gorenstein) : ordered_json(nullptr);
    c["splits"] = cr.splits;
    c["transvections"] = cr.transvections;
    c["canonical"] = {{"base", to_string(cr.canonical.base)}, {"shift", cr.canonical.shift}};
    c["cohomology_window"] = window_json(cr.cohomology_of_invariants);
    c["invariants_of_cohomology_window"] = window_json(cr.invariants_of_cohomology);
    per_char[char_label(cr.characteristic)] = std::move(c);
  }
  j["per_char"] = std::move(per_char);
  j["uniformly_split"] = r.uniformly_split;
  j["generated_by_transpositions"] = r.generated_by_transpositions;
  return j.dump(2) + "\n";
}

std::string report_to_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << ", |G| = " << r.order << ", transpositions c = "
     << r.transpositions.size() << ", |G/N| = " << r.index_g_n << "\n";
  os << "partition of N:";
  for (const auto& block : r.partition) {
    os << " {";
    for (std::size_t k = 0; k < block.size(); ++k) os << (k ? "," : "") << block[k];
    os << "}";
  }
  os << "\n";
  os << "Hilb(S^G)      = " << r.hilb_invariants.to_string() << "   (degree "
     << r.hilb_invariants_degree << ")\n";
  os << "Hilb(S^G_sign) = " << r.hilb_sign_semi_invariants.to_string()
     << "   (valid away from characteristic 2)\n";
  os << "generated by transpositions: " << (r.generated_by_transpositions ? "yes" : "no")
     << ", splits in every characteristic: " << (r.uniformly_split ? "yes" : "no") << "\n";

  for (const auto& cr : r.per_char) {
    os << "\ncharacteristic " << cr.characteristic.p() << "\n";
    os << "  (1) H^n_n(S^G) dims  " << window_text(cr.cohomology_of_invariants) << "\n";
    os << "      H^n_m(S)^G dims  " << window_text(cr.invariants_of_cohomology)
       << "   (shift " << cr.transvections << ")\n";
    os << "  (2) canonical module " << to_string(cr.canonical.base) << "("
       << cr.canonical.shift << ")\n";
    os << "  (3) a-invariant      " << cr.a_invariant << "\n";
    os << "  (4) quasi-Gorenstein " << (cr.quasi_gorenstein ? "yes" : "no");
    if (cr.gorenstein) os << ", Gorenstein " << (*cr.gorenstein ? "yes" : "no");
    os << "\n";
    os << "      S^G -> S splits  " << (cr.splits ? "yes" : "no") << "\n";
  }
  return os.str();
}

}  // namespace perminv
