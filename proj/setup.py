# SPDX-License-Identifier: Apache-2.0
from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "patgen._core",
        sources=[
            "src/diag.cpp",
            "src/formula.cpp",
            "src/pattern.cpp",
            "src/workflow.cpp",
            "src/generator.cpp",
            "src/checker.cpp",
            "python/bindings.cpp",
        ],
        include_dirs=["include"],
        cxx_std=20,
    ),
]

setup(
    package_dir={"patgen": "python/patgen"},
    packages=["patgen"],
    ext_modules=ext_modules,
    cmdclass={"build_ext": build_ext},
    zip_safe=False,
)
