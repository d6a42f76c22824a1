from setuptools import setup, Extension

# The compiled kernel is optional: the package falls back to the pure-Python
# loops in chaosearch._pykernels when the extension is unavailable.
try:
    from Cython.Build import cythonize
    import numpy as np

    extensions = cythonize(
        [
            Extension(
                "chaosearch._kernels",
                ["src/chaosearch/_kernels.pyx"],
                include_dirs=[np.get_include()],
                # keep IEEE semantics so compiled and pure-Python backends
                # produce bit-identical trajectories
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
