#include <pybind11/pybind11.h>
PYBIND11_MODULE(_pantograph, m) { m.doc() = "pantograph core"; }
