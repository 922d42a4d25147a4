#include <pybind11/pybind11.h>

#include "weakembed/derivative.hpp"
#include "weakembed/errors.hpp"
#include "weakembed/io.hpp"

namespace py = pybind11;
using we::json;

namespace {

json parse(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw we::Error(we::Errc::InvalidInput, e.what());
  }
}

std::string check(const std::string& s) {
  return we::verdict_to_json(we::decide(we::instance_from_json(parse(s)))).dump();
}

std::string check_traced(const std::string& s) {
  we::Trace t;
  auto v = we::decide(we::instance_from_json(parse(s)), &t);
  return json{{"verdict", we::verdict_to_json(v)}, {"trace", we::trace_to_json(t)}}.dump();
}

std::string z2(const std::string& s) {
  auto I = we::instance_from_json(parse(s));
  we::validate_instance(I);
  return we::z2_to_json(we::z2_check(we::prune_host(I))).dump();
}

std::string oracle(const std::string& s, double budget) {
  return we::oracle_to_json(we::brute_force_approximable(we::instance_from_json(parse(s)), budget)).dump();
}

std::string derivative(const std::string& s) {
  auto I = we::instance_from_json(parse(s));
  we::validate_instance(I);
  return we::instance_to_json(we::simplified_derivative(we::prune_host(I))).dump();
}

std::string plmap(const std::string& s) {
  return we::instance_to_json(we::reduce_pl_map(we::plmap_from_json(parse(s)))).dump();
}

std::string cplanar(const std::string& s) {
  return we::instance_to_json(we::reduce_flat_clustered(we::clustered_from_json(parse(s)))).dump();
}

}  // namespace

PYBIND11_MODULE(_weakembed, m) {
  m.doc() = "weak embeddability of graph maps (JSON in, JSON out)";
  static py::exception<we::Error> error(m, "WeakEmbedError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const we::Error& e) {
      PyErr_SetString(error.ptr(), we::error_to_json(e).dump().c_str());
    }
  });
  m.def("check", &check, py::arg("instance_json"));
  m.def("check_traced", &check_traced, py::arg("instance_json"));
  m.def("z2", &z2, py::arg("instance_json"));
  m.def("oracle", &oracle, py::arg("instance_json"), py::arg("budget") = 1e6);
  m.def("derivative", &derivative, py::arg("instance_json"));
  m.def("reduce_pl_map", &plmap, py::arg("map_json"));
  m.def("reduce_flat_clustered", &cplanar, py::arg("clustered_json"));
  m.attr("fixture_dir") = WEAKEMBED_FIXTURE_DIR;
}
