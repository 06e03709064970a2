import sys

from . import main


def run() -> int:
    code, out, err = main(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(run())
