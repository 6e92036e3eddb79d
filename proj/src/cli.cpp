#include "netginv/cli.hpp"

#include "netginv/bench.hpp"
#include "netginv/blockinv.hpp"
#include "netginv/connect.hpp"
#include "netginv/error.hpp"
#include "netginv/io.hpp"
#include "netginv/oracle.hpp"
#include "netginv/symmetric_factorization.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace netginv::cli {

namespace {

// Raised for command-line misuse (wrong arity, unreadable file, bad integer).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_arity(const RunConfig& config, std::initializer_list<std::size_t> allowed, const char* usage) {
  for (const auto n : allowed) {
    if (config.inputs.size() == n) return;
  }
  throw UsageError(std::string("usage: ") + usage);
}

std::string load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Network load_network(const std::string& path) {
  Network net = io::parse_network(load(path));
  require_valid(net);
  return net;
}

std::size_t parse_size(const std::string& s, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
  }
  return value;
}

struct Composite {
  Network net1;
  Network net2;
  ConnectionSpec conn;
};

Composite load_composite(const RunConfig& config) {
  Composite c{load_network(config.inputs[0]), load_network(config.inputs[1]),
              io::parse_connection(load(config.inputs[2]))};
  c.conn.validate(c.net1.order(), c.net2.order());
  return c;
}

// Group inverse of one network through deflation of its Laplacian (or of the
// singular Schrodinger matrix of its own weight when the file carries one).
GroupInverseResult single_group_inverse(const Network& net, bool use_weight) {
  const Weight omega = use_weight ? network_weight(net) : Weight::constant(net.order());
  const SymmetricMatrix a = use_weight ? schrodinger_matrix(net, potential_from_weight(net, omega, 0.0)) : laplacian(net);
  GroupInverseResult result;
  result.ginv = group_inverse_deflation(a, omega.values(), a.inf_norm());
  result.eigvec = omega.values();
  fill_residuals(a, result);
  return result;
}

SymmetricMatrix classical_group_inverse(const RunConfig& config, std::size_t single_arity) {
  if (config.inputs.size() == single_arity) {
    return single_group_inverse(load_network(config.inputs[0]), false).ginv;
  }
  const Composite c = load_composite(config);
  return composite_group_inverse(c.net1, c.net2, c.conn).ginv;
}

void emit_matrix(std::ostream& out, const RunConfig& config, const Matrix& m) {
  if (config.format == OutputFormat::Json) {
    out << io::matrix_to_json(m).dump() << '\n';
  } else {
    out << io::format_matrix_text(m);
  }
}

void emit_group_inverse(std::ostream& out, const RunConfig& config, const GroupInverseResult& r) {
  if (config.format == OutputFormat::Json) {
    out << io::group_inverse_to_json(r).dump() << '\n';
    return;
  }
  out << io::format_matrix_text(r.ginv.matrix());
  out << "residual_commute " << io::format_number(r.residual_commute) << '\n';
  out << "residual_projector " << io::format_number(r.residual_projector) << '\n';
  out << "residual_kernel " << io::format_number(r.residual_kernel) << '\n';
}

void emit_scalar(std::ostream& out, const RunConfig& config, const char* key, double value) {
  if (config.format == OutputFormat::Json) {
    out << nlohmann::json{{key, value}}.dump() << '\n';
  } else {
    out << io::format_number(value) << '\n';
  }
}

int cmd_laplacian(const RunConfig& config, std::ostream& out) {
  require_arity(config, {1}, "laplacian <network>");
  const Network net = load_network(config.inputs[0]);
  if (config.lambda > 0.0 || net.vertex_weights()) {
    emit_matrix(out, config, schrodinger_matrix(net, potential_from_weight(net, network_weight(net), config.lambda)).matrix());
  } else {
    emit_matrix(out, config, laplacian(net).matrix());
  }
  return kSuccess;
}

int cmd_ginv(const RunConfig& config, std::ostream& out) {
  require_arity(config, {1}, "ginv <network>");
  const Network net = load_network(config.inputs[0]);
  if (config.lambda > 0.0) {
    const SymmetricMatrix a = schrodinger_matrix(net, potential_from_weight(net, network_weight(net), config.lambda));
    emit_matrix(out, config, factorize_nonsingular(a, ErrorCode::SingularSchur, "Schrodinger matrix").inverse().matrix());
    return kSuccess;
  }
  emit_group_inverse(out, config, single_group_inverse(net, net.vertex_weights().has_value()));
  return kSuccess;
}

int cmd_connect(const RunConfig& config, std::ostream& out) {
  require_arity(config, {3}, "connect <network1> <network2> <connections>");
  const Composite c = load_composite(config);
  const bool weighted = c.net1.vertex_weights() && c.net2.vertex_weights();
  if (config.lambda > 0.0) {
    emit_matrix(out, config,
                composite_schrodinger_inverse(c.net1, c.net2, c.conn, network_weight(c.net1), network_weight(c.net2),
                                              config.lambda)
                    .matrix());
    return kSuccess;
  }
  if (weighted) {
    emit_group_inverse(out, config,
                       composite_schrodinger_group_inverse(c.net1, c.net2, c.conn, network_weight(c.net1),
                                                           network_weight(c.net2)));
  } else {
    emit_group_inverse(out, config, composite_group_inverse(c.net1, c.net2, c.conn));
  }
  return kSuccess;
}

int cmd_kirchhoff(const RunConfig& config, std::ostream& out) {
  require_arity(config, {1, 3}, "kirchhoff <network> | kirchhoff <network1> <network2> <connections>");
  emit_scalar(out, config, "kirchhoff", kirchhoff_index(classical_group_inverse(config, 1)));
  return kSuccess;
}

int cmd_resistance(const RunConfig& config, std::ostream& out) {
  require_arity(config, {3, 5},
                "resistance <network> <x> <y> | resistance <network1> <network2> <connections> <x> <y>");
  const std::size_t k = config.inputs.size();
  const std::size_t x = parse_size(config.inputs[k - 2], "x");
  const std::size_t y = parse_size(config.inputs[k - 1], "y");
  RunConfig files = config;
  files.inputs.resize(k - 2);
  emit_scalar(out, config, "resistance", effective_resistance(classical_group_inverse(files, 1), x, y));
  return kSuccess;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  require_arity(config, {1, 3}, "verify <network> | verify <network1> <network2> <connections>");
  SymmetricMatrix formula;
  SymmetricMatrix reference;
  if (config.inputs.size() == 1) {
    const Network net = load_network(config.inputs[0]);
    formula = single_group_inverse(net, false).ginv;
    reference = oracle::group_inverse_spectral(laplacian(net));
  } else {
    const Composite c = load_composite(config);
    formula = composite_group_inverse(c.net1, c.net2, c.conn).ginv;
    reference = oracle::group_inverse_spectral(laplacian(connect_networks(c.net1, c.net2, c.conn)));
  }
  const double discrepancy = relative_frobenius(formula.matrix(), reference.matrix());
  const bool passed = discrepancy <= config.tolerance;
  if (config.format == OutputFormat::Json) {
    out << nlohmann::json{{"discrepancy", discrepancy}, {"tolerance", config.tolerance}, {"passed", passed}}.dump()
        << '\n';
  } else {
    out << "discrepancy " << io::format_number(discrepancy) << '\n';
  }
  return passed ? kSuccess : kValidationFailure;
}

int cmd_bench(const RunConfig& config, std::ostream& out) {
  require_arity(config, {3}, "bench <n1> <n2> <edges>");
  BenchConfig bench{parse_size(config.inputs[0], "n1"), parse_size(config.inputs[1], "n2"),
                    parse_size(config.inputs[2], "edges"), config.seed, config.repeats};
  const BenchResult r = run_benchmark(bench);
  if (config.format == OutputFormat::Json) {
    out << nlohmann::json{{"composite_seconds", r.composite_seconds},
                          {"oracle_seconds", r.oracle_seconds},
                          {"composite_median_seconds", r.composite_median},
                          {"oracle_median_seconds", r.oracle_median},
                          {"discrepancy", r.discrepancy},
                          {"composite_faster", r.composite_faster()}}
               .dump()
        << '\n';
  } else {
    out << "composite_median_seconds " << io::format_number(r.composite_median) << '\n';
    out << "oracle_median_seconds " << io::format_number(r.oracle_median) << '\n';
    out << "discrepancy " << io::format_number(r.discrepancy) << '\n';
    out << "composite_faster " << (r.composite_faster() ? "true" : "false") << '\n';
  }
  return kSuccess;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::Laplacian: return cmd_laplacian(config, out);
    case Command::GroupInverse: return cmd_ginv(config, out);
    case Command::Connect: return cmd_connect(config, out);
    case Command::Kirchhoff: return cmd_kirchhoff(config, out);
    case Command::Resistance: return cmd_resistance(config, out);
    case Command::Verify: return cmd_verify(config, out);
    case Command::Bench: return cmd_bench(config, out);
  }
  return kValidationFailure;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "laplacian") return Command::Laplacian;
  if (name == "ginv") return Command::GroupInverse;
  if (name == "connect") return Command::Connect;
  if (name == "kirchhoff") return Command::Kirchhoff;
  if (name == "resistance") return Command::Resistance;
  if (name == "verify") return Command::Verify;
  if (name == "bench") return Command::Bench;
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!(config.tolerance > 0.0) || config.lambda < 0.0) {
    err << "error: tolerance must be positive and lambda non-negative\n";
    return kValidationFailure;
  }
  std::ostringstream buffer;
  int code = kSuccess;
  try {
    code = dispatch(config, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::ParseError) return kParseError;
    return is_numerical(e.code()) ? kNumericalFailure : kValidationFailure;
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << *config.output_path << "'\n";
      return kValidationFailure;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace netginv::cli
