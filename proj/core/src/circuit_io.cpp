#include "naqjs/circuit_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace naqjs {

namespace {

// --- QASM 2.0 subset ---

struct Token {
  enum Type { Ident, Number, Symbol, String, End } type;
  std::string text;
  int line;
  int column;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws_and_comments();
    const int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::End, "", line, col};
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        s += advance();
      return {Token::Ident, s, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      std::string s;
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' ||
              src_[pos_] == 'e' || src_[pos_] == 'E' ||
              ((src_[pos_] == '+' || src_[pos_] == '-') && (s.back() == 'e' || s.back() == 'E'))))
        s += advance();
      return {Token::Number, s, line, col};
    }
    if (c == '"') {
      advance();
      std::string s;
      while (pos_ < src_.size() && src_[pos_] != '"') s += advance();
      if (pos_ >= src_.size()) throw ParseError("unterminated string", line, col);
      advance();
      return {Token::String, s, line, col};
    }
    return {Token::Symbol, std::string(1, advance()), line, col};
  }

private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class QasmParser {
public:
  explicit QasmParser(const std::string& src) : lexer_(src) { shift(); }

  Circuit parse() {
    expect_ident("OPENQASM");
    const Token ver = expect(Token::Number, "version number");
    if (ver.text != "2.0") throw ParseError("unsupported OPENQASM version " + ver.text, ver.line, ver.column);
    expect_symbol(";");
    while (cur_.type != Token::End) statement();
    if (!qreg_) throw ParseError("missing qreg declaration", cur_.line, cur_.column);
    circuit_.n = static_cast<Qubit>(qreg_->second);
    validate_circuit(circuit_);
    return circuit_;
  }

private:
  void statement() {
    const Token head = expect(Token::Ident, "statement");
    if (head.text == "include") {
      expect(Token::String, "include path");
      expect_symbol(";");
      return;
    }
    if (head.text == "qreg" || head.text == "creg") {
      const Token name = expect(Token::Ident, "register name");
      expect_symbol("[");
      const int size = expect_int();
      expect_symbol("]");
      expect_symbol(";");
      auto& slot = head.text == "qreg" ? qreg_ : creg_;
      if (slot) throw ParseError("duplicate " + head.text + " declaration", head.line, head.column);
      slot = {name.text, size};
      return;
    }
    if (head.text == "measure") {
      const auto targets = operand_list(head);
      expect_symbol("-");
      expect_symbol(">");
      operand_list(head, /*classical=*/true);  // classical targets are parsed and dropped
      expect_symbol(";");
      for (Qubit q : targets) circuit_.gates.push_back(GateOp::measure(q));
      return;
    }
    if (head.text == "barrier") {
      auto qs = operand_list(head, false, /*allow_whole_register_as_all=*/true);
      expect_symbol(";");
      circuit_.gates.push_back(GateOp::barrier(std::move(qs)));
      return;
    }
    gate_statement(head);
  }

  void gate_statement(const Token& head) {
    static const std::map<std::string, GateKind> kinds = {
        {"x", GateKind::X},     {"sx", GateKind::SX},     {"rz", GateKind::RZ},
        {"cx", GateKind::CX},   {"cz", GateKind::CZ},     {"swap", GateKind::Swap},
        {"bridge", GateKind::Bridge}};
    const auto it = kinds.find(head.text);
    if (it == kinds.end())
      throw ParseError("unsupported gate '" + head.text + "'", head.line, head.column);
    const GateKind kind = it->second;

    double theta = 0.0;
    if (kind == GateKind::RZ) {
      expect_symbol("(");
      theta = angle_expr();
      expect_symbol(")");
    }
    const auto qs = operand_list(head);
    expect_symbol(";");
    if (static_cast<int>(qs.size()) != gate_arity(kind))
      throw ParseError("gate '" + head.text + "' expects " + std::to_string(gate_arity(kind)) +
                           " qubit operand(s), got " + std::to_string(qs.size()),
                       head.line, head.column);
    GateOp g{kind, qs, theta};
    circuit_.gates.push_back(std::move(g));
  }

  // angle := term (('*'|'/') term)* with optional leading '-'; term := number | 'pi'
  double angle_expr() {
    double sign = 1.0;
    if (cur_.type == Token::Symbol && cur_.text == "-") {
      sign = -1.0;
      shift();
    }
    double value = sign * angle_term();
    while (cur_.type == Token::Symbol && (cur_.text == "*" || cur_.text == "/")) {
      const std::string op = cur_.text;
      shift();
      const double rhs = angle_term();
      if (op == "/") {
        if (rhs == 0.0) throw ParseError("division by zero in angle", cur_.line, cur_.column);
        value /= rhs;
      } else {
        value *= rhs;
      }
    }
    return value;
  }

  double angle_term() {
    if (cur_.type == Token::Ident && cur_.text == "pi") {
      shift();
      return M_PI;
    }
    const Token t = expect(Token::Number, "angle");
    return std::stod(t.text);
  }

  // q[i] or bare register name; a bare quantum register expands to all qubits
  // for measure and to the canonical empty list ("all") for barrier.
  std::vector<Qubit> operand_list(const Token& head, bool classical = false,
                                  bool barrier_all = false) {
    std::vector<Qubit> out;
    while (true) {
      const Token reg = expect(Token::Ident, "register operand");
      const auto& decl = classical ? creg_ : qreg_;
      if (!decl || decl->first != reg.text)
        throw ParseError("unknown register '" + reg.text + "'", reg.line, reg.column);
      if (cur_.type == Token::Symbol && cur_.text == "[") {
        shift();
        const int idx = expect_int();
        expect_symbol("]");
        if (idx < 0 || idx >= decl->second)
          throw ParseError("index " + std::to_string(idx) + " out of range for " + reg.text + "[" +
                               std::to_string(decl->second) + "]",
                           reg.line, reg.column);
        if (!classical) out.push_back(static_cast<Qubit>(idx));
      } else {
        // whole-register operand
        if (barrier_all) return {};
        if (!classical)
          for (int i = 0; i < decl->second; ++i) out.push_back(static_cast<Qubit>(i));
      }
      if (cur_.type == Token::Symbol && cur_.text == ",") {
        shift();
        continue;
      }
      break;
    }
    (void)head;
    return out;
  }

  int expect_int() {
    const Token t = expect(Token::Number, "integer");
    try {
      return std::stoi(t.text);
    } catch (const std::exception&) {
      throw ParseError("expected integer, got '" + t.text + "'", t.line, t.column);
    }
  }

  Token expect(Token::Type type, const std::string& what) {
    if (cur_.type != type)
      throw ParseError("expected " + what + ", got '" + cur_.text + "'", cur_.line, cur_.column);
    Token t = cur_;
    shift();
    return t;
  }

  void expect_ident(const std::string& text) {
    if (cur_.type != Token::Ident || cur_.text != text)
      throw ParseError("expected '" + text + "'", cur_.line, cur_.column);
    shift();
  }

  void expect_symbol(const std::string& text) {
    if (cur_.type != Token::Symbol || cur_.text != text)
      throw ParseError("expected '" + text + "', got '" + cur_.text + "'", cur_.line, cur_.column);
    shift();
  }

  void shift() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_{};
  Circuit circuit_;
  std::optional<std::pair<std::string, int>> qreg_;
  std::optional<std::pair<std::string, int>> creg_;
};

std::string serialize_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "qreg q[" << c.n << "];\n";
  os << "creg c[" << c.n << "];\n";
  os.precision(17);
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::Measure:
        os << "measure q[" << g.qubits[0] << "] -> c[" << g.qubits[0] << "];\n";
        break;
      case GateKind::Barrier:
        if (g.qubits.empty()) {
          os << "barrier q;\n";
        } else {
          os << "barrier ";
          for (std::size_t i = 0; i < g.qubits.size(); ++i)
            os << (i ? "," : "") << "q[" << g.qubits[i] << "]";
          os << ";\n";
        }
        break;
      case GateKind::RZ:
        os << "rz(" << g.theta << ") q[" << g.qubits[0] << "];\n";
        break;
      default:
        os << to_string(g.kind) << " ";
        for (std::size_t i = 0; i < g.qubits.size(); ++i)
          os << (i ? "," : "") << "q[" << g.qubits[i] << "]";
        os << ";\n";
    }
  }
  return os.str();
}

// --- JSON schema ---

GateKind kind_from_string(const std::string& s) {
  static const std::map<std::string, GateKind> kinds = {
      {"x", GateKind::X},         {"sx", GateKind::SX},       {"rz", GateKind::RZ},
      {"cz", GateKind::CZ},       {"cx", GateKind::CX},       {"swap", GateKind::Swap},
      {"bridge", GateKind::Bridge}, {"measure", GateKind::Measure}, {"barrier", GateKind::Barrier}};
  const auto it = kinds.find(s);
  if (it == kinds.end()) throw Error("unsupported gate kind '" + s + "'");
  return it->second;
}

Circuit parse_json_circuit(const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, static_cast<int>(e.byte));
  }
  Circuit c;
  c.n = j.at("n").get<Qubit>();
  for (const auto& jg : j.at("gates")) {
    GateOp g;
    g.kind = kind_from_string(jg.at("kind").get<std::string>());
    g.qubits = jg.at("qubits").get<std::vector<Qubit>>();
    if (jg.contains("theta")) g.theta = jg["theta"].get<double>();
    c.gates.push_back(std::move(g));
  }
  validate_circuit(c);
  return c;
}

std::string serialize_json_circuit(const Circuit& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["gates"] = nlohmann::json::array();
  for (const auto& g : c.gates) {
    nlohmann::json jg;
    jg["kind"] = to_string(g.kind);
    jg["qubits"] = g.qubits;
    if (g.kind == GateKind::RZ) jg["theta"] = g.theta;
    j["gates"].push_back(std::move(jg));
  }
  return j.dump();
}

}  // namespace

Circuit parse_circuit(const std::string& source, CircuitFormat format) {
  if (format == CircuitFormat::Qasm2Subset) return QasmParser(source).parse();
  return parse_json_circuit(source);
}

std::string serialize_circuit(const Circuit& c, CircuitFormat format) {
  if (format == CircuitFormat::Qasm2Subset) return serialize_qasm(c);
  return serialize_json_circuit(c);
}

Circuit load_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open circuit file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const bool qasm = path.size() >= 5 && path.compare(path.size() - 5, 5, ".qasm") == 0;
  return parse_circuit(buf.str(), qasm ? CircuitFormat::Qasm2Subset : CircuitFormat::Json);
}

}  // namespace naqjs
