from io import open
from os import path

from setuptools import find_namespace_packages, find_packages, setup

# Get __version__ from version.py.
__version__ = None
ver_file = path.join("circ_minors", "version.py")
with open(ver_file) as fp:
    exec(fp.read())

this_directory = path.abspath(path.dirname(__file__))


# Load README.
def readme():
    readme_path = path.join(this_directory, "README.md")
    with open(readme_path, encoding="utf-8") as fp:
        return fp.read()


# Load requirements.
def requirements():
    requirements_path = path.join(this_directory, "requirements/base.txt")
    with open(requirements_path, encoding="utf-8") as fp:
        return fp.read().splitlines()


setup(
    name="circ_minors",
    version=__version__,
    description=(
        "Circulant contraction minors of circular matrices "
        "via circuits of auxiliary digraphs"
    ),
    long_description=readme(),
    long_description_content_type="text/markdown",
    license="BSD-3",
    keywords=[
        "circular matrices",
        "circulant matrices",
        "matrix minors",
        "set covering",
        "digraphs",
        "combinatorial optimization",
        "python",
    ],
    packages=find_packages(exclude=["tests", "tests.*", "benchmarks", "benchmarks.*"])
    + find_namespace_packages(include=["hydra_plugins.*"]),
    include_package_data=True,
    package_data={
        "circ_minors.cli": [
            "conf/*.yaml",
            "conf/hydra/job_logging/*.yaml",
            "conf/circ_minors/limits/*.yaml",
        ]
    },
    install_requires=requirements(),
    setup_requires=["setuptools>=38.6.0"],
    entry_points={"console_scripts": ["circ-minors=circ_minors.cli.run:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Developers",
        "License :: OSI Approved :: BSD License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
