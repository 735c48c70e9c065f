from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    # -ffp-contract=off keeps IEEE semantics so the compiled core stays
    # bitwise-identical to the numpy fallback; optional=True lets the install
    # fall back to the pure-Python core when no compiler is available.
    extensions = cythonize(
        [
            Extension(
                "semilag1d._core_cy",
                ["src/semilag1d/_core_cy.pyx"],
                extra_compile_args=["-O3", "-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    extensions = []

setup(ext_modules=extensions)
