// qcolor: command-line front end for the quandle-coloring library.
//
//   qcolor alexander FILE
//   qcolor color FILE --n 3 --ell 1 --k 1      | --quandle QS6
//   qcolor min-order FILE --mode linear|quandle
//   qcolor twist --c 5                           | --range 3..14
//
// Global: --format text|json. Exit codes: 0 ok, 1 internal error, 2 usage or
// input error.

#include "qcolor/json_io.hpp"
#include "qcolor/qcolor.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using qcolor::json::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct UsageError : qcolor::Error {
  using qcolor::Error::Error;
};

struct DiagramSource {
  std::string file;
  std::string inline_text;
  std::string format = "auto";

  void attach(CLI::App* sub) {
    sub->add_option("file", file, "Diagram file (.tri, .pd or .json)");
    sub->add_option("--input", file, "Diagram file (.tri, .pd or .json)");
    sub->add_option("--diagram", inline_text, "Inline diagram text");
    sub->add_option("--diagram-format", format, "Diagram format override")
        ->check(CLI::IsMember({"auto", "tri", "pd", "json"}));
  }

  qcolor::OrientedDiagram load() const {
    if (file.empty() == inline_text.empty())
      throw UsageError("give exactly one diagram source (a file or --diagram)");
    std::string text = inline_text;
    std::string fmt = format;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot open " + file);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
      if (fmt == "auto") {
        auto ext = std::filesystem::path(file).extension().string();
        if (ext == ".pd") fmt = "pd";
        else if (ext == ".json") fmt = "json";
        else if (ext == ".tri") fmt = "tri";
      }
    }
    if (fmt == "auto") {
      auto first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && text[first] == '{') fmt = "json";
      else if (text.find("X[") != std::string::npos) fmt = "pd";
      else fmt = "tri";
    }
    if (fmt == "pd") return qcolor::parse_oriented_pd(text);
    if (fmt == "json") {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error& e) {
        throw qcolor::ParseError(e.what());
      }
      return qcolor::json::diagram_from_json(j);
    }
    return qcolor::parse_triples(text);
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

qcolor::FiniteQuandle resolve_quandle(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    json j;
    try {
      j = json::parse(arg);
    } catch (const json::parse_error& e) {
      throw qcolor::ParseError(std::string("quandle JSON: ") + e.what());
    }
    return qcolor::json::quandle_from_json(j);
  }
  if (auto q = qcolor::catalog_lookup(arg)) return *q;
  throw UsageError("unknown quandle '" + arg +
                   "' (catalog: Z3_1x1 S4 Z5_1x1 Z5_1x2 Z5_1x3 QS6 QS6p Z7_1x1..Z7_1x5, or a JSON table)");
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B");
  try {
    std::size_t u1 = 0, u2 = 0;
    std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    int lo = std::stoi(a, &u1), hi = std::stoi(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(s);
    if (lo > hi) throw UsageError("empty range " + s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like A..B");
  }
}

std::string twist_q_text(const qcolor::TwistVerdict& v) {
  return v.q_value ? std::to_string(*v.q_value) : std::string("≥8");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle colorings, Alexander polynomials and minimal coloring orders of knot diagrams"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  DiagramSource alex_src, color_src, min_src;

  auto* alex = app.add_subcommand("alexander", "Print the normalized Alexander polynomial");
  alex->fallthrough();
  alex_src.attach(alex);

  auto* color = app.add_subcommand("color", "Count colorings by a linear or catalog quandle");
  color->fallthrough();
  color_src.attach(color);
  std::optional<std::int64_t> n, ell, k;
  std::string quandle_arg;
  color->add_option("--n", n, "Modulus of (Z_n, l*k)");
  color->add_option("--ell", ell, "l of (Z_n, l*k) (default 1)");
  color->add_option("--k", k, "k of (Z_n, l*k) (default 1)");
  color->add_option("--quandle", quandle_arg, "Catalog name or inline JSON table");

  auto* minord = app.add_subcommand("min-order", "Minimal linear coloring order or minimal quandle order");
  minord->fallthrough();
  min_src.attach(minord);
  std::string mode = "linear";
  minord->add_option("--mode", mode, "linear or quandle")->check(CLI::IsMember({"linear", "quandle"}));

  auto* twist = app.add_subcommand("twist", "Classify twist knots by minimal quandle order");
  twist->fallthrough();
  std::optional<int> twist_c;
  std::string twist_range;
  twist->add_option("--c", twist_c, "Crossing number");
  twist->add_option("--range", twist_range, "Crossing-number range A..B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const bool as_json = format == "json";
  try {
    if (alex->parsed()) {
      auto delta = qcolor::alexander_polynomial(alex_src.load());
      if (as_json)
        std::cout << json{{"alexander", qcolor::json::to_json(delta)}, {"text", delta.to_string()}}.dump() << '\n';
      else
        std::cout << delta.to_string() << '\n';
    } else if (color->parsed()) {
      auto d = color_src.load();
      const bool linear = n.has_value();
      if (linear == !quandle_arg.empty()) throw UsageError("give either --n (with --ell/--k) or --quandle");
      if (!linear && (ell || k)) throw UsageError("--ell/--k only apply with --n");
      qcolor::BigInt count;
      int order = 0;
      std::string name;
      if (linear) {
        qcolor::LinearQuandleParams p(*n, ell.value_or(1), k.value_or(1));
        count = qcolor::coloring_count(d, p);
        order = static_cast<int>(p.n());
        name = p.id();
      } else {
        auto q = resolve_quandle(quandle_arg);
        count = qcolor::quandle_coloring_count(d, q);
        order = q.order();
        name = q.name();
      }
      const bool colorable = count > order;
      if (as_json)
        std::cout << json{{"quandle", name}, {"count", count.str()}, {"colorable", colorable}}.dump() << '\n';
      else
        std::cout << "count: " << count.str() << ", colorable: " << yes_no(colorable) << '\n';
    } else if (minord->parsed()) {
      auto d = min_src.load();
      if (mode == "linear") {
        auto res = qcolor::minimal_linear_order(qcolor::alexander_polynomial(d));
        if (as_json)
          std::cout << qcolor::json::to_json(res).dump() << '\n';
        else
          std::cout << res.n << " (p=" << res.witness.p << ", k=" << res.witness.k << ")\n";
      } else {
        auto res = qcolor::minimal_quandle_order(d);
        if (as_json)
          std::cout << qcolor::json::to_json(res).dump() << '\n';
        else if (res.order)
          std::cout << *res.order << " (" << qcolor::display_name(res.witness) << ")\n";
        else
          std::cout << qcolor::kGeq8Verdict << '\n';
      }
    } else if (twist->parsed()) {
      if (twist_c.has_value() == !twist_range.empty()) throw UsageError("give exactly one of --c or --range");
      if (twist_c) {
        auto v = qcolor::twist_min_quandle_order(*twist_c);
        if (as_json) {
          json j = qcolor::json::to_json(v);
          j["c"] = *twist_c;
          j["delta"] = qcolor::json::to_json(qcolor::twist_alexander(*twist_c));
          std::cout << j.dump() << '\n';
        } else {
          std::cout << "c=" << *twist_c << ", q=" << twist_q_text(v) << ", witness "
                    << (v.q_value ? qcolor::display_name(v.witness) : std::string("none")) << '\n';
        }
      } else {
        auto [lo, hi] = parse_range(twist_range);
        qcolor::require_twist_crossings(lo);
        json rows = json::array();
        if (!as_json) std::cout << "c,delta,q_value,witness\n";
        for (int c = lo; c <= hi; ++c) {
          auto v = qcolor::twist_min_quandle_order(c);
          auto delta = qcolor::twist_alexander(c);
          if (as_json) {
            json j = qcolor::json::to_json(v);
            j["c"] = c;
            j["delta"] = qcolor::json::to_json(delta);
            rows.push_back(j);
          } else {
            std::cout << c << ',' << delta.to_string() << ',' << twist_q_text(v) << ','
                      << (v.q_value ? v.witness : std::string("none")) << '\n';
          }
        }
        if (as_json) std::cout << rows.dump() << '\n';
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const qcolor::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const qcolor::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
