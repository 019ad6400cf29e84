from setuptools import setup

with open('README.md', 'r', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='corita',
    version='v0.1.0',
    license='BSD 2-Clause License',
    description='Exact checks for firm rings, Morita contexts, corings and comodules',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=['corita'],
    package_data={
        '': ['py.typed'],
    },
    zip_safe=False,
    python_requires='>=3.7',
    extras_require={
        ':python_version<"3.8"': ['typing_extensions'],
        'test': ['pytest', 'hypothesis'],
        'doc': ['Sphinx', 'sphinx-rtd-theme'],
    },
    entry_points={
        'console_scripts': ['corita=corita.cli:entry'],
    },
    platforms='any',
    classifiers=[
        'Topic :: Scientific/Engineering :: Mathematics',
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Typing :: Typed',
    ],
)
