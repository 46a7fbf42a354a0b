#include "wpoly/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wpoly/errors.hpp"

namespace wpoly {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trimmed(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

ParseError at_line(int line, const std::string& what) {
  return ParseError("line " + std::to_string(line) + ": " + what);
}

long long parse_int(const std::string& token, int line, const std::string& what) {
  if (token.empty()) throw at_line(line, "expected " + what);
  for (char ch : token)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw at_line(line, "expected " + what + ", got '" + token + "'");
  if (token.size() > 12) throw at_line(line, what + " out of range: '" + token + "'");
  return std::stoll(token);
}

// `key=value` with a decimal value.
long long parse_keyed(const std::string& token, const std::string& key, int line) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0)
    throw at_line(line, "expected " + prefix + "<int>, got '" + token + "'");
  return parse_int(token.substr(prefix.size()), line, "an integer after " + prefix);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_braced_list(const std::string& text, int line) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw at_line(line, "expected a braced label list like {1,3,6}, got '" + text + "'");
  const std::string inner = trimmed(text.substr(1, text.size() - 2));
  std::vector<int> labels;
  if (inner.empty()) return labels;
  for (const std::string& part : split(inner, ',')) {
    const long long v = parse_int(trimmed(part), line, "a label");
    labels.push_back(static_cast<int>(v));
  }
  return labels;
}

Matroid matroid_from_lists(long long n, const std::vector<std::vector<int>>& bases) {
  std::vector<Subset> subs;
  subs.reserve(bases.size());
  for (const auto& b : bases) subs.push_back(Subset::of_elements(b, static_cast<int>(n)));
  return Matroid::from_bases(static_cast<int>(n), subs);
}

Matroid parse_matroid_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1;
  std::vector<std::vector<int>> bases;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trimmed(line);
    if (body.empty()) continue;
    if (n < 0) {
      n = parse_keyed(body, "n", lineno);
      continue;
    }
    bases.push_back(parse_braced_list(body, lineno));
  }
  if (n < 0) throw at_line(1, "expected n=<int>");
  return matroid_from_lists(n, bases);
}

Matroid parse_matroid_json(std::istream& in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("bases") ||
      !doc["n"].is_number_integer() || !doc["bases"].is_array())
    throw ParseError("JSON: expected an object with integer n and array bases");
  std::vector<std::vector<int>> bases;
  for (const auto& entry : doc["bases"]) {
    if (!entry.is_array()) throw ParseError("JSON: each basis must be an array of labels");
    std::vector<int> labels;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) throw ParseError("JSON: labels must be integers");
      labels.push_back(v.get<int>());
    }
    bases.push_back(std::move(labels));
  }
  return matroid_from_lists(doc["n"].get<long long>(), bases);
}

// Extension element in polynomial form: terms c, t, t^e, c*t, c*t^e joined
// by '+'.
GfElem parse_poly_token(const std::string& token, const FiniteField& f, int line) {
  const int p = f.characteristic();
  const int m = f.extension_degree();
  std::vector<int> digits(m, 0);
  std::vector<bool> seen(m, false);
  for (const std::string& raw : split(token, '+')) {
    const std::string term = trimmed(raw);
    long long coeff = 1;
    int expo = 0;
    const std::size_t tpos = term.find('t');
    if (tpos == std::string::npos) {
      coeff = parse_int(term, line, "a coefficient");
    } else {
      std::string head = trimmed(term.substr(0, tpos));
      if (!head.empty()) {
        if (head.back() != '*')
          throw at_line(line, "malformed term '" + term + "' (expected c*t^e)");
        head.pop_back();
        coeff = parse_int(trimmed(head), line, "a coefficient");
      }
      std::string tail = trimmed(term.substr(tpos + 1));
      if (!tail.empty()) {
        if (tail.front() != '^')
          throw at_line(line, "malformed term '" + term + "' (expected c*t^e)");
        expo = static_cast<int>(parse_int(trimmed(tail.substr(1)), line, "an exponent"));
      } else {
        expo = 1;
      }
    }
    if (coeff >= p) throw at_line(line, "coefficient " + std::to_string(coeff) +
                                            " not reduced mod " + std::to_string(p));
    if (expo >= m) throw at_line(line, "exponent t^" + std::to_string(expo) +
                                           " outside degree " + std::to_string(m));
    if (seen[expo]) throw at_line(line, "repeated exponent in '" + token + "'");
    seen[expo] = true;
    digits[expo] = static_cast<int>(coeff);
  }
  long long value = 0;
  for (int i = m - 1; i >= 0; --i) value = value * p + digits[i];
  return static_cast<GfElem>(value);
}

GfElem parse_entry(const std::string& token, const FiniteField& f, int line) {
  if (token.find('t') != std::string::npos) {
    if (f.extension_degree() == 1)
      throw at_line(line, "polynomial entry '" + token + "' in a prime field");
    return parse_poly_token(token, f, line);
  }
  const long long v = parse_int(token, line, "a field element");
  if (v >= f.order())
    throw at_line(line, "entry " + token + " outside GF(" + std::to_string(f.order()) + ")");
  return static_cast<GfElem>(v);
}

std::string format_labels(const std::vector<int>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(labels[i]);
  }
  out += "}";
  return out;
}

// Bases sorted by their label sequences, for stable output.
std::vector<std::vector<int>> sorted_basis_lists(const Matroid& m) {
  std::vector<std::vector<int>> lists;
  lists.reserve(m.bases().size());
  for (const Subset& b : m.bases()) lists.push_back(b.elements());
  std::sort(lists.begin(), lists.end());
  return lists;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

Matroid parse_matroid(std::istream& in) {
  // Peek past leading whitespace: '{' opens JSON, anything else is text.
  std::istream::int_type ch;
  while ((ch = in.peek()) != std::istream::traits_type::eof() &&
         std::isspace(static_cast<unsigned char>(ch)))
    in.get();
  if (ch == '{') return parse_matroid_json(in);
  return parse_matroid_text(in);
}

Matroid load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_matroid(in);
}

std::string render_matroid_text(const Matroid& m) {
  std::string out = "n=" + std::to_string(m.ground_size()) + "\n";
  for (const auto& labels : sorted_basis_lists(m)) out += format_labels(labels) + "\n";
  return out;
}

std::string render_matroid_json(const Matroid& m) {
  ordered_json doc;
  doc["n"] = m.ground_size();
  doc["bases"] = sorted_basis_lists(m);
  return dump(doc);
}

FieldMatrix parse_matrix(std::istream& in) {
  std::string line;
  int lineno = 0;

  long long p = -1, m = -1, rows = -1, cols = -1;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trimmed(line);
    if (body.empty()) continue;
    std::istringstream header(body);
    std::string tp, tm, tr, tc, extra;
    header >> tp >> tm >> tr >> tc;
    if (header >> extra) throw at_line(lineno, "unexpected token '" + extra + "' in header");
    p = parse_keyed(tp, "p", lineno);
    m = parse_keyed(tm, "m", lineno);
    rows = parse_keyed(tr, "rows", lineno);
    cols = parse_keyed(tc, "cols", lineno);
    break;
  }
  if (p < 0) throw at_line(1, "expected header p=<p> m=<m> rows=<r> cols=<c>");
  if (rows < 0 || cols < 0 || rows > 4096 || cols > 4096)
    throw at_line(lineno, "unreasonable matrix dimensions");

  const FiniteField field = FiniteField::make(static_cast<int>(p), static_cast<int>(m));
  FieldMatrix a(field, static_cast<int>(rows), static_cast<int>(cols));

  int filled = 0;
  while (filled < rows && std::getline(in, line)) {
    ++lineno;
    const std::string body = trimmed(line);
    if (body.empty()) continue;
    std::istringstream row(body);
    std::string token;
    for (int j = 0; j < cols; ++j) {
      if (!(row >> token))
        throw at_line(lineno, "row has fewer than " + std::to_string(cols) + " entries");
      a.at(filled, j) = parse_entry(token, field, lineno);
    }
    if (row >> token) throw at_line(lineno, "row has more than " + std::to_string(cols) + " entries");
    ++filled;
  }
  if (filled < rows)
    throw at_line(lineno + 1, "expected " + std::to_string(rows) + " rows, got " +
                                  std::to_string(filled));
  return a;
}

FieldMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_matrix(in);
}

std::string render_matrix_text(const FieldMatrix& a) {
  std::string out = "p=" + std::to_string(a.field().characteristic()) +
                    " m=" + std::to_string(a.field().extension_degree()) +
                    " rows=" + std::to_string(a.rows()) + " cols=" + std::to_string(a.cols()) +
                    "\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j > 0) out += " ";
      out += std::to_string(a.at(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string render_rank_text(const Matroid& m) {
  return "n=" + std::to_string(m.ground_size()) + " rank=" + std::to_string(m.rank()) +
         " corank=" + std::to_string(m.corank()) + "\n";
}

std::string render_rank_json(const Matroid& m) {
  ordered_json doc;
  doc["n"] = m.ground_size();
  doc["rank"] = m.rank();
  doc["corank"] = m.corank();
  return dump(doc);
}

std::string render_circuits_text(const Matroid& m) {
  std::string out;
  for (const Subset& c : m.circuits()) out += format_labels(c.elements()) + "\n";
  return out;
}

std::string render_circuits_json(const Matroid& m) {
  ordered_json doc;
  auto& arr = doc["circuits"] = ordered_json::array();
  for (const Subset& c : m.circuits()) arr.push_back(c.elements());
  return dump(doc);
}

std::string render_betti_text(const std::vector<BettiTable>& tables) {
  std::string out;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    if (t > 0) out += "\n";
    out += "l=" + std::to_string(tables[t].level) + "\n";
    int current = -1;
    for (const auto& [key, beta] : tables[t].entries) {
      if (beta == 0) continue;
      if (key.first != current) {
        if (current >= 0) out += "\n";
        out += "i=" + std::to_string(key.first) + ":";
        current = key.first;
      }
      out += " j=" + std::to_string(key.second) + ":" + std::to_string(beta);
    }
    if (current >= 0) out += "\n";
  }
  return out;
}

std::string render_betti_json(const std::vector<BettiTable>& tables) {
  ordered_json levels = ordered_json::array();
  for (const auto& table : tables) {
    ordered_json block;
    block["l"] = table.level;
    auto& entries = block["entries"] = ordered_json::array();
    for (const auto& [key, beta] : table.entries) {
      if (beta == 0) continue;
      entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", beta}});
    }
    levels.push_back(std::move(block));
  }
  ordered_json doc;
  doc["levels"] = std::move(levels);
  return dump(doc);
}

std::string render_gwp_text(const std::vector<UniPoly>& gwps) {
  std::string out;
  for (std::size_t j = 0; j < gwps.size(); ++j)
    out += "P_" + std::to_string(j) + " = " + gwps[j].str("Z") + "\n";
  return out;
}

std::string render_gwp_json(const std::vector<UniPoly>& gwps) {
  ordered_json list = ordered_json::array();
  for (std::size_t j = 0; j < gwps.size(); ++j) {
    ordered_json entry;
    entry["j"] = j;
    ordered_json coeffs = ordered_json::object();
    if (const auto deg = gwps[j].degree())
      for (int d = 0; d <= *deg; ++d)
        if (gwps[j].coeff(d) != 0) coeffs[std::to_string(d)] = gwps[j].coeff(d);
    entry["coeffs"] = std::move(coeffs);
    list.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["gwp"] = std::move(list);
  return dump(doc);
}

std::string render_enumerator_text(const TriPoly& w) { return w.str() + "\n"; }

std::string render_enumerator_json(const TriPoly& w) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : w.terms())
    terms.push_back({{"dx", key[0]}, {"dy", key[1]}, {"dz", key[2]}, {"c", c}});
  ordered_json doc;
  doc["terms"] = std::move(terms);
  return dump(doc);
}

std::string render_tutte_text(const BiPoly& t) { return t.str() + "\n"; }

std::string render_tutte_json(const BiPoly& t) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : t.terms())
    terms.push_back({{"dx", key[0]}, {"dy", key[1]}, {"c", c}});
  ordered_json doc;
  doc["terms"] = std::move(terms);
  return dump(doc);
}

std::string render_weights_text(const WeightHierarchy& h) {
  if (h.d.empty()) return "none\n";
  std::string out;
  for (std::size_t i = 0; i < h.d.size(); ++i) {
    if (i > 0) out += " ";
    out += "d_" + std::to_string(i + 1) + "=" + std::to_string(h.d[i]);
  }
  return out + "\n";
}

std::string render_weights_json(const WeightHierarchy& h) {
  ordered_json doc;
  doc["d"] = h.d;
  return dump(doc);
}

std::string render_distribution_text(const WeightDistribution& dist) {
  std::string out;
  for (std::size_t j = 0; j < dist.counts.size(); ++j)
    out += std::to_string(j) + " " + std::to_string(dist.counts[j]) + "\n";
  return out;
}

std::string render_distribution_json(const WeightDistribution& dist) {
  ordered_json doc;
  doc["m"] = dist.m;
  doc["counts"] = dist.counts;
  return dump(doc);
}

}  // namespace wpoly
