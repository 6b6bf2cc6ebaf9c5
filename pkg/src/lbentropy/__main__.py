from contextlib import suppress

from lbentropy.cli import main


if __name__ == "__main__":
    with suppress(KeyboardInterrupt):
        main()
