from bateman.cli import run

run()
