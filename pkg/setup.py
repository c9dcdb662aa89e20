from setuptools import setup, find_packages


def readme():
    with open('README.rst') as f:
        return f.read()


def requirements(path='requirements.txt'):
    with open(path) as f:
        return [line.strip() for line in f if line.strip() and not line.startswith('#')]


setup(
    name='gstructure',
    version='0.1.0',
    description='Exact invariants and structure-group reductions for G-structures on spheres',
    long_description=readme(),
    license='MIT',
    packages=find_packages(exclude=('gstructure.testing',)),
    include_package_data=True,
    python_requires='>=3.9',
    install_requires=requirements(),
    extras_require={'dev': ['pytest>=7.0']},
    entry_points={
        'console_scripts': ['gstructure=gstructure.cli:main'],
    },
)
