#include "clustexp/document.hpp"

#include "clustexp/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace clustexp {

const NamedCurve* SurfaceDocument::find_curve(std::string_view name) const {
  for (const auto& c : curves)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

struct Token {
  std::string text;
  int column = 0;
};

struct PendingCurve {
  int line = 0;
  std::vector<Token> tokens;
};

[[noreturn]] void fail(const std::string& code, int line, int column, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

}  // namespace

SurfaceDocument parse_surface(std::string_view text) {
  std::vector<Arc> arcs;
  std::map<std::string, int> arc_ids;
  std::map<std::string, int> arc_lines;
  std::vector<Triangle> triangles;
  std::vector<PendingCurve> pending;
  int internal = 0;
  int line_no = 0;
  int last_line = 1;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    last_line = line_no;
    const std::string& kw = tok[0].text;
    if (kw == "arc") {
      if (tok.size() != 3) fail("document.syntax", line_no, tok[0].column, "expected 'arc <name> internal|boundary'");
      const std::string& name = tok[1].text;
      if (arc_ids.count(name)) fail("document.invalid", line_no, tok[1].column, "arc '" + name + "' declared twice");
      Arc a{name, ArcKind::internal, 0};
      if (tok[2].text == "internal") {
        a.index = ++internal;
      } else if (tok[2].text == "boundary") {
        a.kind = ArcKind::boundary;
      } else {
        fail("document.syntax", line_no, tok[2].column, "expected 'internal' or 'boundary'");
      }
      arc_ids[name] = static_cast<int>(arcs.size());
      arc_lines[name] = line_no;
      arcs.push_back(std::move(a));
    } else if (kw == "triangle") {
      if (tok.size() != 4) fail("document.syntax", line_no, tok[0].column, "expected three signed arcs");
      Triangle tri;
      for (int s = 0; s < 3; ++s) {
        const Token& t = tok[static_cast<std::size_t>(s + 1)];
        if (t.text.size() < 2 || (t.text[0] != '+' && t.text[0] != '-'))
          fail("document.syntax", line_no, t.column, "expected '+name' or '-name'");
        const std::string name = t.text.substr(1);
        auto it = arc_ids.find(name);
        if (it == arc_ids.end()) fail("document.invalid", line_no, t.column + 1, "unknown arc '" + name + "'");
        for (int p = 0; p < s; ++p)
          if (tri.slots[static_cast<std::size_t>(p)].arc == it->second)
            fail("document.invalid", line_no, t.column + 1, "arc '" + name + "' appears twice in one triangle");
        tri.slots[static_cast<std::size_t>(s)] = Slot{it->second, t.text[0] == '+' ? Sign::plus : Sign::minus};
      }
      triangles.push_back(tri);
    } else if (kw == "curve") {
      pending.push_back({line_no, tok});
    } else {
      fail("document.syntax", line_no, tok[0].column, "unknown keyword '" + kw + "'");
    }
  }

  SurfaceDocument doc{Triangulation(std::move(arcs), std::move(triangles)), {}};
  const auto report = validate(doc.triangulation);
  if (!report.ok()) {
    const auto& issue = report.issues.front();
    int line = last_line;
    const auto q = issue.message.find('\'');
    if (q != std::string::npos) {
      const auto q2 = issue.message.find('\'', q + 1);
      auto it = arc_lines.find(issue.message.substr(q + 1, q2 - q - 1));
      if (it != arc_lines.end()) line = it->second;
    }
    fail("document.invalid", line, 1, issue.code + ": " + issue.message);
  }

  const Triangulation& t = doc.triangulation;
  for (const PendingCurve& pc : pending) {
    const auto& tok = pc.tokens;
    if (tok.size() < 3) fail("document.syntax", pc.line, tok[0].column, "expected 'curve <name> from|arc ...'");
    const std::string& name = tok[1].text;
    if (doc.find_curve(name)) fail("document.invalid", pc.line, tok[1].column, "curve '" + name + "' declared twice");
    auto lookup = [&](const Token& tk) {
      auto it = arc_ids.find(tk.text);
      if (it == arc_ids.end()) fail("document.invalid", pc.line, tk.column, "unknown arc '" + tk.text + "'");
      return it->second;
    };
    try {
      if (tok[2].text == "arc") {
        if (tok.size() != 4) fail("document.syntax", pc.line, tok[2].column, "expected 'curve <name> arc <arc>'");
        doc.curves.push_back({name, arc_curve(t, lookup(tok[3]))});
      } else if (tok[2].text == "from") {
        if (tok.size() < 6 || tok[4].text != "crosses")
          fail("document.syntax", pc.line, tok[2].column, "expected 'curve <name> from <triangle> crosses <arc>...'");
        int start = 0;
        try {
          std::size_t used = 0;
          start = std::stoi(tok[3].text, &used);
          if (used != tok[3].text.size()) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
          fail("document.syntax", pc.line, tok[3].column, "expected a triangle index");
        }
        std::vector<int> crossings;
        for (std::size_t i = 5; i < tok.size(); ++i) crossings.push_back(lookup(tok[i]));
        doc.curves.push_back({name, derive_curve(t, start - 1, crossings)});
      } else {
        fail("document.syntax", pc.line, tok[2].column, "expected 'from' or 'arc'");
      }
    } catch (const Error& e) {
      if (e.code().rfind("document.", 0) == 0) throw;
      fail("document.invalid", pc.line, tok[1].column, "curve '" + name + "': " + e.code() + ": " + e.what());
    }
  }
  return doc;
}

SurfaceDocument load_surface(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("document.io", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_surface(ss.str());
}

std::string render_surface(const SurfaceDocument& doc) {
  const Triangulation& t = doc.triangulation;
  std::ostringstream os;
  // Internal indices follow declaration order, so internal arcs are written
  // in index order first.
  for (int i = 1; i <= t.internal_count(); ++i) os << "arc " << t.arc(t.internal_arc(i)).label << " internal\n";
  for (const Arc& a : t.arcs())
    if (!a.internal()) os << "arc " << a.label << " boundary\n";
  for (const Triangle& tri : t.triangles()) {
    os << "triangle";
    for (const Slot& s : tri.slots) os << ' ' << (s.sign == Sign::plus ? '+' : '-') << t.arc(s.arc).label;
    os << '\n';
  }
  for (const NamedCurve& c : doc.curves) os << "curve " << c.name << ' ' << render_curve(t, c.curve) << '\n';
  return os.str();
}

}  // namespace clustexp
