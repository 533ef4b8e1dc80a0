from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pnsat._kernels",
                ["src/pnsat/_kernels.pyx"],
                extra_compile_args=["-O3"],
                # a failed compile leaves the pure-Python kernels in charge
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
