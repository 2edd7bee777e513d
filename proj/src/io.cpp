#include "minplus/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "minplus/error.hpp"

namespace minplus {

namespace {

// Builds the DOM through nlohmann's own SAX-to-DOM adapter but stores
// floating-point literals as their source text.
class ExactNumberSax : public nlohmann::json_sax<json> {
 public:
  explicit ExactNumberSax(json& root) : dom_(root, true) {}

  bool null() override { return dom_.null(); }
  bool boolean(bool v) override { return dom_.boolean(v); }
  bool number_integer(number_integer_t v) override { return dom_.number_integer(v); }
  bool number_unsigned(number_unsigned_t v) override { return dom_.number_unsigned(v); }
  bool number_float(number_float_t, const string_t& s) override {
    string_t copy = s;
    return dom_.string(copy);
  }
  bool string(string_t& v) override { return dom_.string(v); }
  bool binary(binary_t& v) override { return dom_.binary(v); }
  bool start_object(std::size_t n) override { return dom_.start_object(n); }
  bool key(string_t& v) override { return dom_.key(v); }
  bool end_object() override { return dom_.end_object(); }
  bool start_array(std::size_t n) override { return dom_.start_array(n); }
  bool end_array() override { return dom_.end_array(); }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    position_ = position;
    message_ = ex.what();
    return false;
  }

  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  nlohmann::detail::json_sax_dom_parser<json> dom_;
  std::size_t position_ = 0;
  std::string message_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(what); }

Value value_at(const json& j, const std::string& where) {
  try {
    return value_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::size_t first_non_blank(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  return i;
}

Matrix parse_text_matrix(std::string_view text) {
  std::vector<std::vector<Value>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Value> row;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      try {
        row.push_back(parse_value(line.substr(i, j - i)));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no, i + 1);
      }
      i = j;
    }
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()),
                         line_no, 1);
      }
      rows.push_back(std::move(row));
    }
    pos = eol + 1;
  }
  if (rows.empty()) throw ParseError("matrix file contains no rows", line_no, 1);
  if (rows.size() != rows.front().size()) {
    throw ParseError("matrix has " + std::to_string(rows.size()) + " rows of " + std::to_string(rows.front().size()) +
                         " entries; it must be square",
                     line_no, 1);
  }
  return Matrix(rows);
}

}  // namespace

json parse_json(std::string_view text) {
  json root;
  ExactNumberSax sax(root);
  const bool ok = json::sax_parse(text.begin(), text.end(), &sax);
  if (!ok) {
    auto [line, column] = line_column(text, sax.position() == 0 ? 0 : sax.position() - 1);
    throw ParseError(sax.message(), line, column);
  }
  return root;
}

json to_json(const Value& v) {
  if (v.is_epsilon()) return "inf";
  const Rational& q = v.finite();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Value value_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Value(Rational(mpz_class(std::to_string(j.get<std::uint64_t>()), 10)));
    return Value(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_value(j.get<std::string>());
  // Only reachable for documents not produced by parse_json.
  if (j.is_number_float()) {
    std::ostringstream os;
    os.precision(std::numeric_limits<double>::max_digits10);
    os << j.get<double>();
    return parse_value(os.str());
  }
  throw ParseError("expected a number, a \"p/q\" string or \"inf\", got " + std::string(j.type_name()));
}

json to_json(const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.order(); ++i) {
    json row = json::array();
    for (const Value& v : a.row(i)) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return {{"n", a.order()}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) schema_error("matrix JSON must be an object with \"rows\"");
  const json& rows = j.at("rows");
  if (!rows.is_array() || rows.empty()) schema_error("\"rows\" must be a non-empty array");
  const std::size_t n = rows.size();
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<std::int64_t>() != static_cast<std::int64_t>(n)) {
      schema_error("\"n\" does not match the number of rows (" + std::to_string(n) + ")");
    }
  }
  std::vector<Value> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      schema_error("rows[" + std::to_string(i) + "] must be an array of " + std::to_string(n) + " entries");
    }
    for (std::size_t k = 0; k < n; ++k) {
      e.push_back(value_at(row[k], "rows[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
  }
  return Matrix(n, std::move(e));
}

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const Value& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) schema_error("polynomial JSON must be an object with \"coeffs\"");
  const json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.empty()) schema_error("\"coeffs\" must be a non-empty array");
  if (j.contains("degree")) {
    const json& d = j.at("degree");
    if (!d.is_number_integer() || d.get<std::int64_t>() + 1 != static_cast<std::int64_t>(coeffs.size())) {
      schema_error("\"degree\" must equal the number of coefficients minus one");
    }
  }
  std::vector<Value> c;
  c.reserve(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) c.push_back(value_at(coeffs[k], "coeffs[" + std::to_string(k) + "]"));
  return Polynomial(std::move(c));
}

json to_json(const Factorization& f) {
  json factors = json::array();
  for (const Root& r : f.factors) factors.push_back({{"root", to_json(Value(r.value))}, {"multiplicity", r.multiplicity}});
  return {{"factors", std::move(factors)}, {"xpower", f.xpower}, {"text", to_string(f)}};
}

json to_json(const Breakpoint& b) {
  return {{"x", to_json(Value(b.x))},
          {"y", to_json(Value(b.y))},
          {"slope_left", b.slope_left},
          {"slope_right", b.slope_right}};
}

json to_json(const Circuit& c) {
  json vertices = json::array();
  for (std::size_t v : c.vertices) vertices.push_back(v + 1);
  return {{"vertices", std::move(vertices)},
          {"length", c.length()},
          {"weight", to_json(Value(c.weight))},
          {"average", to_json(Value(c.average()))}};
}

json to_json(const ExtendedCircuit& c) {
  json members = json::array();
  for (const Circuit& m : c.circuits) members.push_back(to_json(m));
  return {{"circuits", std::move(members)},
          {"total_length", c.total_length},
          {"weight", to_json(Value(c.weight))},
          {"average", to_json(Value(c.average()))}};
}

Matrix parse_matrix(std::string_view text) {
  const std::size_t start = first_non_blank(text);
  if (start < text.size() && text[start] == '{') return matrix_from_json(parse_json(text));
  return parse_text_matrix(text);
}

Polynomial parse_polynomial(std::string_view text) { return polynomial_from_json(parse_json(text)); }

Input parse_input(std::string_view text) {
  const std::size_t start = first_non_blank(text);
  if (start < text.size() && text[start] == '{') {
    json j = parse_json(text);
    if (j.is_object() && j.contains("coeffs")) return polynomial_from_json(j);
    return matrix_from_json(j);
  }
  return parse_text_matrix(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string to_text(const Matrix& a) {
  std::string s;
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (j) s += ' ';
      s += to_string(a(i, j));
    }
    s += '\n';
  }
  return s;
}

}  // namespace minplus
