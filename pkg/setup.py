"""Build script.

The compiled geometry kernel (src/rectknap/_kernels.pyx) is optional: when
Cython or a C compiler is unavailable the build falls back to the pure-Python
twin (rectknap._kernels_py) which is selected at import time.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernels ({exc}); pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); pure-Python fallback will be used")


ext_modules = []
cmdclass = {}
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/rectknap/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
    cmdclass["build_ext"] = optional_build_ext
except ImportError:
    print("warning: Cython not available; pure-Python kernels will be used")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
