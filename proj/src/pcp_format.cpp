#include "pgcert/pcp_format.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "pgcert/errors.hpp"

namespace pgcert {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

InconsistentPresentation::InconsistentPresentation(ConsistencyWitness w)
    : std::runtime_error("inconsistent presentation: " + describe(w)), witness_(std::move(w)) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start)
      out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

class LineParser {
 public:
  LineParser(std::size_t line, std::vector<Token> tokens)
      : line_(line), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(line_, column, msg);
  }

  std::size_t end_column() const {
    return tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
  }

  const Token& at(std::size_t k, const char* what) const {
    if (k >= tokens_.size())
      fail(end_column(), std::string("expected ") + what);
    return tokens_[k];
  }

  long long integer(std::size_t k, const char* what) const {
    const Token& t = at(k, what);
    return parse_int(t.text, t.column, what);
  }

  long long parse_int(std::string_view s, std::size_t column, const char* what) const {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail(column, std::string("expected ") + what + ", got '" + std::string(s) + "'");
    return v;
  }

  void expect(std::size_t k, std::string_view literal) const {
    const Token& t = at(k, std::string(literal).c_str());
    if (t.text != literal)
      fail(t.column, "expected '" + std::string(literal) + "', got '" + std::string(t.text) + "'");
  }

  void expect_end(std::size_t k) const {
    if (k < tokens_.size())
      fail(tokens_[k].column, "unexpected trailing token '" + std::string(tokens_[k].text) + "'");
  }

  // Word starting at token k; generators must be > floor (1-based) and ascending.
  Word word(std::size_t k, long long floor, int p, long long ngens) const {
    const Token& first = at(k, "relation word");
    if (first.text == "1") {
      expect_end(k + 1);
      return {};
    }
    Word w;
    long long prev = floor;
    for (std::size_t t = k; t < tokens_.size(); ++t) {
      const Token& tok = tokens_[t];
      auto caret = tok.text.find('^');
      if (caret == std::string_view::npos)
        fail(tok.column, "word factor '" + std::string(tok.text) + "' must have the form k^e");
      long long gen = parse_int(tok.text.substr(0, caret), tok.column, "generator index");
      long long e = parse_int(tok.text.substr(caret + 1), tok.column + caret + 1, "exponent");
      if (gen < 1 || gen > ngens)
        fail(tok.column, "generator index " + std::to_string(gen) + " out of range 1.." +
                             std::to_string(ngens));
      if (gen <= floor)
        fail(tok.column, "weight violation: generator " + std::to_string(gen) +
                             " must exceed " + std::to_string(floor));
      if (gen <= prev && t > k)
        fail(tok.column, "generators in a word must be strictly ascending");
      if (e < 1 || e > p - 1)
        fail(tok.column + caret + 1, "exponent " + std::to_string(e) + " outside [1, " +
                                         std::to_string(p - 1) + "]");
      w.push_back({static_cast<std::size_t>(gen - 1), e});
      prev = gen;
    }
    return w;
  }

 private:
  std::size_t line_;
  std::vector<Token> tokens_;
};

}  // namespace

PcpFile parse_pcp(std::string_view text, const std::string& fallback_id) {
  std::string group_id = fallback_id;
  bool id_seen = false;
  PresentationSpec spec;
  int header = 0;  // number of header lines consumed
  std::size_t line_no = 0;
  std::set<std::size_t> pow_seen;
  std::set<std::pair<std::size_t, std::size_t>> comm_seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      std::string_view comment = trim(line.substr(hash + 1));
      if (!id_seen && comment.substr(0, 3) == "id:") {
        std::string_view id = trim(comment.substr(3));
        if (id.empty())
          throw ParseError(line_no, hash + 1, "empty group id");
        group_id = std::string(id);
        id_seen = true;
      }
      line = line.substr(0, hash);
    }
    auto tokens = tokenize(line);
    if (tokens.empty())
      continue;
    LineParser lp(line_no, tokens);
    const std::string_view kw = tokens[0].text;

    if (header == 0) {
      lp.expect(0, "pcp");
      if (lp.integer(1, "format version") != 1)
        lp.fail(tokens[1].column, "unsupported format version");
      lp.expect_end(2);
      ++header;
      continue;
    }
    if (header == 1) {
      lp.expect(0, "prime");
      long long p = lp.integer(1, "prime");
      if (!is_prime(p))
        lp.fail(tokens[1].column, std::to_string(p) + " is not prime");
      if (p > kMaxPrime)
        lp.fail(tokens[1].column, "prime exceeds supported maximum " + std::to_string(kMaxPrime));
      lp.expect_end(2);
      spec.prime = static_cast<int>(p);
      ++header;
      continue;
    }
    if (header == 2) {
      lp.expect(0, "ngens");
      long long m = lp.integer(1, "generator count");
      if (m < 1 || m > static_cast<long long>(kMaxGenerators))
        lp.fail(tokens[1].column, "generator count must be in 1.." +
                                      std::to_string(kMaxGenerators));
      lp.expect_end(2);
      spec.ngens = static_cast<std::size_t>(m);
      ++header;
      continue;
    }

    const auto m = static_cast<long long>(spec.ngens);
    if (kw == "pow") {
      long long i = lp.integer(1, "generator index");
      if (i < 1 || i > m)
        lp.fail(tokens[1].column, "generator index out of range");
      lp.expect(2, "=");
      auto idx = static_cast<std::size_t>(i - 1);
      if (!pow_seen.insert(idx).second)
        lp.fail(tokens[0].column, "duplicate power relation for generator " + std::to_string(i));
      Word w = lp.word(3, i, spec.prime, m);
      if (!w.empty())
        spec.powers[idx] = std::move(w);
    } else if (kw == "comm") {
      long long j = lp.integer(1, "generator index");
      long long i = lp.integer(2, "generator index");
      if (j < 1 || j > m)
        lp.fail(tokens[1].column, "generator index out of range");
      if (i < 1 || i > m)
        lp.fail(tokens[2].column, "generator index out of range");
      if (j <= i)
        lp.fail(tokens[1].column, "commutator relation needs j > i");
      lp.expect(3, "=");
      auto key = std::make_pair(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1));
      if (!comm_seen.insert(key).second)
        lp.fail(tokens[0].column, "duplicate commutator relation");
      Word w = lp.word(4, j, spec.prime, m);
      if (!w.empty())
        spec.commutators[key] = std::move(w);
    } else {
      lp.fail(tokens[0].column, "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (header < 3)
    throw ParseError(line_no, 1,
                     std::string("missing header line '") +
                         (header == 0 ? "pcp 1" : header == 1 ? "prime <p>" : "ngens <m>") + "'");

  PcPresentation P(spec);
  if (auto w = validate_consistency(P))
    throw InconsistentPresentation(*w);
  return {group_id, std::move(P)};
}

PcpFile read_pcp_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pcp(buf.str(), path.stem().string());
}

namespace {

void write_word(std::ostream& os, const Element& w) {
  bool any = false;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k]) {
      os << (any ? " " : "") << (k + 1) << '^' << w[k];
      any = true;
    }
  if (!any)
    os << '1';
}

}  // namespace

std::string serialize_pcp(const PcPresentation& P, const std::string& group_id) {
  std::ostringstream os;
  os << "pcp 1\nprime " << P.prime() << "\nngens " << P.ngens() << '\n';
  if (!group_id.empty())
    os << "# id: " << group_id << '\n';
  for (std::size_t i = 0; i < P.ngens(); ++i)
    if (!P.power_relation(i).is_identity()) {
      os << "pow " << (i + 1) << " = ";
      write_word(os, P.power_relation(i));
      os << '\n';
    }
  for (std::size_t j = 0; j < P.ngens(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!P.commutator_relation(j, i).is_identity()) {
        os << "comm " << (j + 1) << ' ' << (i + 1) << " = ";
        write_word(os, P.commutator_relation(j, i));
        os << '\n';
      }
  return os.str();
}

bool same_presentation(const PcPresentation& a, const PcPresentation& b) {
  if (a.prime() != b.prime() || a.ngens() != b.ngens())
    return false;
  for (std::size_t i = 0; i < a.ngens(); ++i) {
    if (a.power_relation(i) != b.power_relation(i))
      return false;
    for (std::size_t j = i + 1; j < a.ngens(); ++j)
      if (a.commutator_relation(j, i) != b.commutator_relation(j, i))
        return false;
  }
  return true;
}

}  // namespace pgcert
