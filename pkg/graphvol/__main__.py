from graphvol.cli.main import cli

cli()
