"""Print the max-abs residual of each stored magic-state decomposition."""

from graphstab.magic import DECOMPOSITIONS, residual


def main():
    for name, terms in DECOMPOSITIONS.items():
        print(f"{name:9s} terms={len(terms)} residual={residual(terms):.3e}")


if __name__ == "__main__":
    main()
