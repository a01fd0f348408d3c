import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("dioph11._scan_ext", ["src/dioph11/_scan_ext.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )


class OptionalBuildExt(build_ext):
    """A failed compile leaves the pure-Python kernel in charge."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            warnings.warn(f"compiled scan kernel not built: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            warnings.warn(f"compiled scan kernel not built: {exc}")


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
