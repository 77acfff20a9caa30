from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "ptgraph._ptgraph",
    sources=[
        "src/bindings.cpp",
        "src/field.cpp",
        "src/geom.cpp",
        "src/graph.cpp",
        "src/subspace.cpp",
        "src/cliques.cpp",
        "src/directions.cpp",
        "src/census.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
