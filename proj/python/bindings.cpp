#include "netginv/blockinv.hpp"
#include "netginv/connect.hpp"
#include "netginv/io.hpp"
#include "netginv/network.hpp"
#include "netginv/oracle.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

namespace py = pybind11;
using namespace netginv;

namespace {

using EdgeTuple = std::tuple<std::size_t, std::size_t, double>;

Network make_network(std::size_t n, const std::vector<EdgeTuple>& edges,
                     std::optional<std::vector<double>> weights) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [x, y, c] : edges) es.push_back({x, y, c});
  return Network(n, std::move(es), {}, std::move(weights));
}

ConnectionSpec make_connection(const std::vector<EdgeTuple>& edges) {
  ConnectionSpec spec;
  for (const auto& [x, y, a] : edges) spec.edges.push_back({x, y, a});
  return spec;
}

py::dict result_dict(const GroupInverseResult& r) {
  py::dict d;
  d["ginv"] = r.ginv.matrix();
  d["eigvec"] = r.eigvec;
  d["residual_commute"] = r.residual_commute;
  d["residual_projector"] = r.residual_projector;
  d["residual_kernel"] = r.residual_kernel;
  d["h2_rcond"] = r.h2_rcond ? py::cast(*r.h2_rcond) : py::none();
  return d;
}

SymmetricMatrix sym(const Matrix& m) { return SymmetricMatrix(m); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Group inverses, effective resistances and Kirchhoff indices of networks";

  py::register_exception<Error>(m, "NetginvError", PyExc_ValueError);

  py::class_<Network>(m, "Network")
      .def(py::init(&make_network), py::arg("n"), py::arg("edges"), py::arg("weights") = std::nullopt)
      .def_property_readonly("order", &Network::order)
      .def_property_readonly("edges",
                             [](const Network& net) {
                               std::vector<EdgeTuple> out;
                               for (const auto& e : net.edges()) out.emplace_back(e.x, e.y, e.c);
                               return out;
                             })
      .def_property_readonly("weights", &Network::vertex_weights)
      .def("conductance", &Network::conductance)
      .def("scaled", &Network::scaled)
      .def("__eq__", [](const Network& a, const Network& b) { return a == b; })
      .def("__repr__", [](const Network& net) {
        return "Network(order=" + std::to_string(net.order()) + ", edges=" + std::to_string(net.edges().size()) + ")";
      });

  m.def("validate", [](const Network& net) {
    const ValidationReport r = validate_network(net);
    return py::make_tuple(r.ok, r.error ? py::cast(to_string(*r.error)) : py::none(), r.message);
  });
  m.def("laplacian", [](const Network& net) { return laplacian(net).matrix(); });
  m.def(
      "schrodinger_matrix",
      [](const Network& net, std::optional<Vector> weight, double lambda) {
        const Weight omega = weight ? Weight(*weight) : Weight::constant(net.order());
        return schrodinger_matrix(net, potential_from_weight(net, omega, lambda)).matrix();
      },
      py::arg("net"), py::arg("weight") = std::nullopt, py::arg("lam") = 0.0);
  m.def("potential", [](const Network& net, const Vector& weight, double lambda) {
    return potential_from_weight(net, Weight(weight), lambda).values;
  }, py::arg("net"), py::arg("weight"), py::arg("lam") = 0.0);

  m.def("schur_complement", [](const Matrix& h1, const Matrix& b, const Matrix& h2) {
    return schur_complement(sym(h1), b, sym(h2)).matrix();
  });
  m.def("block_inverse", [](const Matrix& h1, const Matrix& b, const Matrix& h2) {
    return block_inverse(sym(h1), b, sym(h2)).matrix();
  });
  m.def("block_inverse_sym", [](const Matrix& h1, const Matrix& b, const Matrix& h2) {
    return block_inverse_sym(sym(h1), b, sym(h2)).matrix();
  });
  m.def(
      "group_inverse_deflation",
      [](const Matrix& s, const Vector& v, double reference_scale) {
        return group_inverse_deflation(sym(s), v, reference_scale).matrix();
      },
      py::arg("s"), py::arg("v"), py::arg("reference_scale") = 0.0);
  m.def("group_inverse_block", [](const Matrix& h1, const Matrix& h2, const Matrix& b, const Vector& v,
                                  const Vector& w) {
    return result_dict(group_inverse_block(BlockSystem{sym(h1), sym(h2), b, v, w}));
  });
  m.def("group_inverse_bordered", [](const Matrix& h, const Vector& s, double alpha, const Vector& u) {
    return result_dict(group_inverse_bordered(sym(h), s, alpha, u));
  });
  m.def("verify_group_inverse", [](const Matrix& a, const Matrix& g, const Vector& u, double tol) {
    const VerificationReport r = verify_group_inverse(a, g, u, tol);
    py::dict d;
    d["residual_projector"] = r.residual_projector;
    d["residual_commute"] = r.residual_commute;
    d["residual_symmetry"] = r.residual_symmetry;
    d["residual_kernel"] = r.residual_kernel;
    d["passed"] = r.passed;
    return d;
  });

  m.def("connect_networks", [](const Network& a, const Network& b, const std::vector<EdgeTuple>& conn) {
    return connect_networks(a, b, make_connection(conn));
  });
  m.def("composite_group_inverse", [](const Network& a, const Network& b, const std::vector<EdgeTuple>& conn) {
    return result_dict(composite_group_inverse(a, b, make_connection(conn)));
  });
  m.def("composite_schrodinger_group_inverse", [](const Network& a, const Network& b,
                                                  const std::vector<EdgeTuple>& conn, const Vector& w1,
                                                  const Vector& w2) {
    return result_dict(composite_schrodinger_group_inverse(a, b, make_connection(conn), Weight(w1), Weight(w2)));
  });
  m.def("composite_schrodinger_inverse", [](const Network& a, const Network& b, const std::vector<EdgeTuple>& conn,
                                            const Vector& w1, const Vector& w2, double lambda) {
    return composite_schrodinger_inverse(a, b, make_connection(conn), Weight(w1), Weight(w2), lambda).matrix();
  });
  m.def("single_edge_group_inverse", [](const Network& a, const Network& b, std::size_t p, std::size_t q,
                                        double conductance) {
    return result_dict(single_edge_group_inverse(a, b, p, q, conductance));
  });

  m.def("effective_resistance", [](const Matrix& g, std::size_t x, std::size_t y) {
    return effective_resistance(SymmetricMatrix::symmetrize(g), x, y);
  });
  m.def("kirchhoff_index", [](const Matrix& g) { return kirchhoff_index(SymmetricMatrix::symmetrize(g)); });

  m.def("group_inverse_spectral", [](const Matrix& a) { return oracle::group_inverse_spectral(sym(a)).matrix(); });
  m.def(
      "pairwise_resistance",
      [](const Network& net, std::size_t ground) { return oracle::pairwise_resistance_bruteforce(net, ground).matrix(); },
      py::arg("net"), py::arg("ground") = 0);

  m.def("parse_network", [](const std::string& text) { return io::parse_network(text); });
  m.def("parse_connection", [](const std::string& text) {
    std::vector<EdgeTuple> out;
    for (const auto& c : io::parse_connection(text).edges) out.emplace_back(c.x, c.y, c.a);
    return out;
  });
  m.def("format_network", &io::format_network);
}
