import os
import shutil
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
        ext_path = Path.cwd() / self.get_ext_fullpath(ext.name)
        ext_path.parent.mkdir(parents=True, exist_ok=True)
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        pybind11_dir = subprocess.check_output(
            [sys.executable, "-m", "pybind11", "--cmakedir"], text=True
        ).strip()
        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                ext.sourcedir,
                f"-DCMAKE_BUILD_TYPE={cfg}",
                f"-Dpybind11_DIR={pybind11_dir}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_temp,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", f"-j{os.cpu_count() or 2}"],
            cwd=build_temp,
            check=True,
        )

        # The CMake target writes into <build>/python/curv4; place the
        # artifact where setuptools expects this extension.
        built = sorted((build_temp / "python" / "curv4").glob("_core*.so"))
        if not built:
            raise FileNotFoundError("CMake build produced no _core module")
        shutil.copy2(built[-1], ext_path)


setup(
    ext_modules=[CMakeExtension("curv4._core")],
    cmdclass={"build_ext": CMakeBuild},
    options={"build": {"build_base": "build-py"}},
)
