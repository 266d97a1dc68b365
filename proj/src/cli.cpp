#include "projectivoid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "projectivoid/classical.hpp"
#include "projectivoid/literal.hpp"
#include "projectivoid/matrix.hpp"
#include "projectivoid/matrix_io.hpp"
#include "projectivoid/series.hpp"

namespace projectivoid {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Session {
  std::optional<unsigned long> prime;
  std::optional<long> prec;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string file;
  std::string input;
  std::string left;
  std::string right;
  std::string ring = "full";
  std::string side = "nonneg";
  std::string order = "antidiagonal";
  std::string field = "fp";
  std::size_t rank = 2;
  std::size_t shears = 3;
  std::size_t count = 10;
  unsigned max_pow = 1;
  bool no_diagonal = false;

  Prime require_prime() const {
    if (!prime) throw UsageError("--prime is required");
    return Prime(*prime);
  }
  std::optional<Prime> optional_prime() const {
    return prime ? std::optional<Prime>(Prime(*prime)) : std::nullopt;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The main matrix argument comes from --file or the positional literal.
std::string matrix_text(const Session& s) {
  if (!s.file.empty()) return read_file(s.file);
  if (!s.input.empty()) return s.input;
  throw UsageError("a matrix is required (--file or an inline JSON document)");
}

std::string series_text(const Session& s) {
  if (!s.input.empty()) return s.input;
  if (!s.file.empty()) return read_file(s.file);
  throw UsageError("a series literal is required");
}

Subring parse_subring(const std::string& name) {
  if (name == "full") return Subring::Full;
  if (name == "nonneg") return Subring::NonNeg;
  if (name == "nonpos") return Subring::NonPos;
  throw UsageError("unknown subring '" + name + "'");
}

class Emitter {
 public:
  Emitter(const Session& s, std::string command, std::ostream& out)
      : json_(s.format == "json"), command_(std::move(command)), out_(out) {}

  void emit(const ordered_json& value, const std::string& text) {
    if (json_) {
      ordered_json doc;
      doc["command"] = command_;
      doc["result"] = value;
      out_ << doc.dump() << '\n';
    } else {
      out_ << text << '\n';
    }
  }

 private:
  bool json_;
  std::string command_;
  std::ostream& out_;
};

ordered_json matrix_json(const SMatrix& a) { return ordered_json::parse(to_json(a)); }

std::string bool_text(bool b) { return b ? "true" : "false"; }

using Handler = std::function<void(const Session&, Emitter&)>;

void cmd_norm(const Session& s, Emitter& e) {
  PSeries f = parse_series(series_text(s), s.require_prime());
  Valuation v = gauss_valuation(f);
  e.emit(v.is_finite() ? ordered_json(v.value()) : ordered_json("inf"), v.to_string());
}

void cmd_unit(const Session& s, Emitter& e) {
  PSeries f = parse_series(series_text(s), s.require_prime());
  bool u = is_unit(f, parse_subring(s.ring));
  e.emit(u, bool_text(u));
}

void cmd_invert(const Session& s, Emitter& e) {
  if (!s.prec) throw UsageError("invert needs --prec");
  PSeries f = parse_series(series_text(s), s.require_prime());
  std::string text = to_string(invert(f, *s.prec));
  e.emit(text, text);
}

void cmd_degree(const Session& s, Emitter& e) {
  PSeries f = parse_series(series_text(s), s.require_prime());
  std::string text = to_string(degree(f));
  e.emit(text, text);
}

void cmd_reduce(const Session& s, Emitter& e) {
  PSeries f = parse_series(series_text(s), s.require_prime());
  std::string text = to_string(reduce_series(f));
  e.emit(text, text);
}

void cmd_det(const Session& s, Emitter& e) {
  SMatrix a = parse_matrix(matrix_text(s), s.optional_prime());
  std::string text = to_string(det(a));
  e.emit(text, text);
}

void cmd_transition(const Session& s, Emitter& e) {
  SMatrix a = parse_matrix(matrix_text(s), s.optional_prime());
  bool t = is_transition(a);
  e.emit(t, bool_text(t));
}

void cmd_bundle_degree(const Session& s, Emitter& e) {
  SMatrix a = parse_matrix(matrix_text(s), s.optional_prime());
  std::string text = to_string(bundle_degree(a).value);
  e.emit(text, text);
}

void cmd_act(const Session& s, Emitter& e) {
  if (s.left.empty() || s.right.empty()) throw UsageError("act needs --left V.json and --right U.json");
  SMatrix a = parse_matrix(matrix_text(s), s.optional_prime());
  SMatrix v = parse_matrix(read_file(s.left), a.prime());
  SMatrix u = parse_matrix(read_file(s.right), a.prime());
  SMatrix r = act(v, a, u);
  e.emit(matrix_json(r), to_json(r));
}

void cmd_rand_auto(const Session& s, Emitter& e) {
  Subring side = parse_subring(s.side);
  if (side == Subring::Full) throw UsageError("--side must be nonneg or nonpos");
  if (s.rank == 0) throw UsageError("--rank must be positive");
  SMatrix r = random_automorphism(s.require_prime(), s.rank, side,
                                  AutomorphismOptions{s.shears, !s.no_diagonal}, s.seed);
  e.emit(matrix_json(r), to_json(r));
}

void cmd_family(const Session& s, Emitter& e) {
  auto family = degree_one_family(s.require_prime(), s.max_pow);
  ordered_json list = ordered_json::array();
  std::string text;
  for (std::size_t i = 0; i < family.size(); ++i) {
    list.push_back(matrix_json(family[i]));
    if (i) text += '\n';
    text += to_json(family[i]);
  }
  e.emit(list, text);
}

void cmd_enumerate(const Session& s, Emitter& e) {
  if (s.count == 0) throw UsageError("--count must be positive");
  std::vector<std::string> items;
  if (s.order == "antidiagonal") {
    for (const auto& x : enumerate_antidiagonal(s.require_prime(), s.count)) items.push_back(to_string(x));
  } else if (s.order == "calkin-wilf") {
    if (s.prime) {
      for (const auto& x : enumerate_calkin_wilf(s.count, Prime(*s.prime))) items.push_back(to_string(x));
    } else {
      for (const auto& x : enumerate_calkin_wilf(s.count)) items.push_back(x.get_str());
    }
  } else {
    throw UsageError("unknown order '" + s.order + "'");
  }
  ordered_json list = items;
  std::string text;
  for (std::size_t i = 0; i < items.size(); ++i) text += (i ? "\n" : "") + items[i];
  e.emit(list, text);
}

bool finite_field(const Session& s) {
  if (s.field == "fp") return true;
  if (s.field == "q") return false;
  throw UsageError("--field must be fp or q");
}

void cmd_split(const Session& s, Emitter& e) {
  const std::string text = matrix_text(s);
  LMatrix a = parse_laurent_matrix(text, finite_field(s), s.optional_prime());
  Prime p(ordered_json::parse(text)["p"].get<unsigned long>());
  Splitting sp = split(a);
  ordered_json doc;
  doc["type"] = sp.type.degrees;
  doc["V"] = ordered_json::parse(to_json(sp.certificate.v, p));
  doc["U"] = ordered_json::parse(to_json(sp.certificate.u, p));
  doc["D"] = ordered_json::parse(to_json(sp.certificate.d, p));
  e.emit(doc, to_string(sp.type));
}

void cmd_verify_split(const Session& s, Emitter& e) {
  if (s.left.empty() || s.right.empty()) {
    throw UsageError("verify-split needs --left V.json and --right U.json");
  }
  const bool fp = finite_field(s);
  LMatrix a = parse_laurent_matrix(matrix_text(s), fp, s.optional_prime());
  LMatrix v = parse_laurent_matrix(read_file(s.left), fp, s.optional_prime());
  LMatrix u = parse_laurent_matrix(read_file(s.right), fp, s.optional_prime());
  bool ok = splitting_invariance_check(a, u, v);
  e.emit(ok, bool_text(ok));
}

void add_common(CLI::App* sub, Session& s) {
  sub->add_option("--prime", s.prime, "Session prime p");
  sub->add_option("--prec", s.prec, "Target precision (coefficient valuation) for invert");
  sub->add_option("--seed", s.seed, "Seed for randomized generators");
  sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--file", s.file, "Read the main input from a file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s;
  CLI::App app{"Exact arithmetic in perfectoid Tate algebras and bundle transition matrices",
               "projectivoid"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    Handler handler;
    enum { None, Series, Matrix } positional;
  };
  const std::vector<Command> commands = {
      {"norm", "Gauss valuation (min coefficient valuation) of a series", cmd_norm, Command::Series},
      {"unit", "Unit test in a subring (--ring full|nonneg|nonpos)", cmd_unit, Command::Series},
      {"invert", "Truncated inverse of a unit to precision --prec", cmd_invert, Command::Series},
      {"degree", "Largest dominant exponent", cmd_degree, Command::Series},
      {"reduce", "Residue reduction of a series with Gauss norm <= 1", cmd_reduce, Command::Series},
      {"det", "Determinant of a matrix", cmd_det, Command::Matrix},
      {"transition", "Whether det is a unit of the full ring", cmd_transition, Command::Matrix},
      {"bundle-degree", "Exponent of the determinant's monomial factor", cmd_bundle_degree,
       Command::Matrix},
      {"act", "V A U for --left V, --right U", cmd_act, Command::Matrix},
      {"rand-auto", "Seeded random automorphism", cmd_rand_auto, Command::None},
      {"family", "Degree-one family diag(v^a, v^(1-a))", cmd_family, Command::None},
      {"enumerate", "Enumerate exponents", cmd_enumerate, Command::None},
      {"split", "Birkhoff splitting type of a Laurent matrix", cmd_split, Command::Matrix},
      {"verify-split", "Splitting type invariance under V A U", cmd_verify_split, Command::Matrix},
  };

  std::map<CLI::App*, const Command*> by_app;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, s);
    if (c.positional == Command::Series) sub->add_option("series", s.input, "Series literal");
    if (c.positional == Command::Matrix) sub->add_option("matrix", s.input, "Inline matrix JSON");
    const std::string name = c.name;
    if (name == "unit") {
      sub->add_option("--ring", s.ring, "Subring")->check(CLI::IsMember({"full", "nonneg", "nonpos"}));
    }
    if (name == "act" || name == "verify-split") {
      sub->add_option("--left", s.left, "Left factor V (JSON file)");
      sub->add_option("--right", s.right, "Right factor U (JSON file)");
    }
    if (name == "split" || name == "verify-split") {
      sub->add_option("--field", s.field, "Base field")->check(CLI::IsMember({"fp", "q"}));
    }
    if (name == "rand-auto") {
      sub->add_option("--rank", s.rank, "Matrix rank m");
      sub->add_option("--side", s.side, "nonneg (U) or nonpos (V)")
          ->check(CLI::IsMember({"nonneg", "nonpos"}));
      sub->add_option("--shears", s.shears, "Number of elementary shears");
      sub->add_flag("--no-diagonal", s.no_diagonal, "Omit the diagonal unit factor");
    }
    if (name == "family") sub->add_option("--max-pow", s.max_pow, "Finest level b_max");
    if (name == "enumerate") {
      sub->add_option("--order", s.order, "antidiagonal or calkin-wilf")
          ->check(CLI::IsMember({"antidiagonal", "calkin-wilf"}));
      sub->add_option("--count", s.count, "Number of terms");
    }
    by_app[sub] = &c;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  const Command* command = by_app.at(app.get_subcommands().front());
  try {
    Emitter emitter(s, command->name, out);
    command->handler(s, emitter);
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace projectivoid
