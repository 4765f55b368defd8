"""Builds the _core extension by driving CMake from setuptools.

The wheel contains the pure-python package from python/constakit plus the
compiled pybind11 module, which CMake drops directly into the extension
output directory. Tools and C++ tests are skipped for packaging builds.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        outdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        outdir.mkdir(parents=True, exist_ok=True)
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={cfg}",
            "-DCONSTAKIT_PYTHON=ON",
            "-DCONSTAKIT_DEV=OFF",
            f"-DCONSTAKIT_PY_OUTDIR={outdir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        try:
            import pybind11

            cmake_args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass

        subprocess.run(["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True)
        subprocess.run(["cmake", "--build", ".", "-j"], cwd=build_temp, check=True)


setup(
    ext_modules=[CMakeExtension("constakit._core")],
    cmdclass={"build_ext": CMakeBuild},
)
