from circ_minors.cli.run import run
