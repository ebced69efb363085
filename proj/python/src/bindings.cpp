#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "polycount/catalan.hpp"
#include "polycount/cayley_tree.hpp"
#include "polycount/full_count.hpp"
#include "polycount/oracle.hpp"
#include "polycount/path_count.hpp"

namespace py = pybind11;

namespace {

using polycount::BigInt;
using polycount::Component;
using polycount::VertexAddress;

// Counts routinely outgrow 64 bits, so they cross into Python as exact ints
// via their decimal form.
py::object to_py_int(const BigInt& value) {
  PyObject* obj = PyLong_FromString(value.str().c_str(), nullptr, 10);
  if (obj == nullptr) {
    throw py::error_already_set();
  }
  return py::reinterpret_steal<py::object>(obj);
}

py::list to_py_ints(const std::vector<BigInt>& values) {
  py::list out;
  for (const BigInt& v : values) {
    out.append(to_py_int(v));
  }
  return out;
}

std::vector<VertexAddress> parse_addresses(const std::vector<std::string>& texts) {
  std::vector<VertexAddress> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) {
    out.push_back(VertexAddress::parse(text));
  }
  return out;
}

std::vector<std::string> address_strings(const std::vector<VertexAddress>& addresses) {
  std::vector<std::string> out;
  out.reserve(addresses.size());
  for (const VertexAddress& a : addresses) {
    out.push_back(a.str());
  }
  return out;
}

Component component_from_strings(const std::vector<std::string>& texts) {
  return Component::from_vertices(parse_addresses(texts));
}

polycount::OracleOptions make_options(int cap, const std::string& host, bool parallel) {
  polycount::OracleOptions opts;
  opts.cap = cap;
  opts.parallel = parallel;
  if (host == "cayley") {
    opts.host = polycount::HostTree::kCayley;
  } else if (host == "rooted-binary") {
    opts.host = polycount::HostTree::kRootedBinary;
  } else {
    throw std::invalid_argument("host must be 'cayley' or 'rooted-binary'");
  }
  return opts;
}

polycount::Family parse_family(const std::string& family) {
  if (family == "full") {
    return polycount::Family::kFull;
  }
  if (family == "path") {
    return polycount::Family::kPath;
  }
  throw std::invalid_argument("family must be 'full' or 'path'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counts of n-vertex connected components of the degree-3 tree";

  // Catalan numbers.
  m.def(
      "catalan", [](std::size_t n) { return to_py_int(polycount::catalan(n)); }, py::arg("n"));
  m.def(
      "catalan_table",
      [](std::size_t max_index) {
        const polycount::CatalanTable table = polycount::catalan_table(max_index);
        return to_py_ints({table.values().begin(), table.values().end()});
      },
      py::arg("max_index"));
  m.def("catalan_asymptotic", &polycount::catalan_asymptotic, py::arg("n"));

  // Tree structure.
  m.def(
      "neighbors",
      [](const std::string& address) {
        const auto around = VertexAddress::parse(address).neighbors();
        return address_strings({around.begin(), around.end()});
      },
      py::arg("address"));
  m.def(
      "classify",
      [](const std::vector<std::string>& vertices) {
        const polycount::ComponentProfile profile =
            polycount::classify(component_from_strings(vertices));
        py::dict out;
        out["boundary"] = address_strings(profile.boundary);
        out["interior"] = address_strings(profile.interior);
        out["is_full"] = profile.is_full;
        return out;
      },
      py::arg("vertices"));
  m.def(
      "is_full_by_count",
      [](const std::vector<std::string>& vertices) {
        return polycount::is_full_by_count(component_from_strings(vertices));
      },
      py::arg("vertices"));
  m.def(
      "minimal_full_component",
      [](const std::vector<std::string>& vertices) {
        return address_strings(
            polycount::minimal_full_component(component_from_strings(vertices)).vertices());
      },
      py::arg("vertices"));
  m.def(
      "shortest_path",
      [](const std::string& x, const std::string& y) {
        return address_strings(
            polycount::shortest_path(VertexAddress::parse(x), VertexAddress::parse(y))
                .vertices());
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "minimal_component",
      [](const std::vector<std::string>& vertices) {
        return address_strings(polycount::minimal_component(parse_addresses(vertices)).vertices());
      },
      py::arg("vertices"));
  m.def(
      "canonical_full_component",
      [](int m) { return address_strings(polycount::canonical_full_component(m).vertices()); },
      py::arg("m"));
  m.def(
      "canonical_path",
      [](int m) { return address_strings(polycount::canonical_path(m).vertices()); },
      py::arg("m"));

  // Full-component family.
  m.def(
      "gen_vector_full",
      [](int m) { return to_py_ints(polycount::gen_vector_full(m).coeffs); }, py::arg("m"));
  m.def("kernel_check", &polycount::kernel_check, py::arg("m"));
  m.def(
      "full_count_convolution",
      [](int n, int m) { return to_py_int(polycount::full_count_convolution(n, m)); },
      py::arg("n"), py::arg("m"));
  m.def(
      "full_count_closed",
      [](int n, int m) { return to_py_int(polycount::full_count_closed(n, m)); }, py::arg("n"),
      py::arg("m"));
  m.def("full_asymptotic", &polycount::full_asymptotic, py::arg("n"), py::arg("m"));

  // Shortest-path family.
  m.def("floor_m", &polycount::floor_m, py::arg("m"));
  m.def(
      "gen_vector_path",
      [](int m) { return to_py_ints(polycount::gen_vector_path(m).coeffs); }, py::arg("m"));
  m.def(
      "gen_vector_path_additive",
      [](int m) { return to_py_ints(polycount::gen_vector_path_additive(m).coeffs); },
      py::arg("m"));
  m.def(
      "path_count_convolution",
      [](int n, int m) { return to_py_int(polycount::path_count_convolution(n, m)); },
      py::arg("n"), py::arg("m"));
  m.def(
      "path_count_recurrence",
      [](int n, int m) { return to_py_int(polycount::path_count_recurrence(n, m)); },
      py::arg("n"), py::arg("m"));
  m.def(
      "path_count_closed",
      [](int n, int m) { return to_py_int(polycount::path_count_closed(n, m)); }, py::arg("n"),
      py::arg("m"));
  m.def("path_asymptotic", &polycount::path_asymptotic, py::arg("n"), py::arg("m"));

  // Brute-force oracle.
  m.def(
      "count_components_oracle",
      [](const std::vector<std::string>& fixed, int n, int cap, const std::string& host,
         bool parallel) {
        const std::vector<VertexAddress> addresses = parse_addresses(fixed);
        return to_py_int(
            polycount::count_components_oracle(addresses, n, make_options(cap, host, parallel)));
      },
      py::arg("fixed"), py::arg("n"), py::arg("cap") = polycount::kOracleDefaultCap,
      py::arg("host") = "cayley", py::arg("parallel") = false);
  m.def(
      "verify_family",
      [](const std::string& family, int max_n, int max_m, int cap) {
        polycount::OracleOptions opts;
        opts.cap = cap;
        const polycount::VerifyReport report =
            polycount::verify_family(parse_family(family), max_n, max_m, opts);
        py::list points;
        for (const polycount::VerifyPoint& p : report.points) {
          py::dict row;
          row["m"] = p.m;
          row["n"] = p.n;
          row["oracle"] = to_py_int(p.oracle_count);
          row["formula"] = to_py_int(p.formula_count);
          row["match"] = p.match;
          points.append(row);
        }
        py::dict out;
        out["family"] = family;
        out["all_match"] = report.all_match;
        out["points"] = points;
        return out;
      },
      py::arg("family"), py::arg("max_n"), py::arg("max_m"),
      py::arg("cap") = polycount::kOracleDefaultCap);
  m.def(
      "shape_independence_check",
      [](int m, int n, int cap) {
        polycount::OracleOptions opts;
        opts.cap = cap;
        return polycount::shape_independence_check(m, n, opts);
      },
      py::arg("m"), py::arg("n"), py::arg("cap") = polycount::kOracleDefaultCap);
}
