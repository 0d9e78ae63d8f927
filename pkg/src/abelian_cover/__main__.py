import sys

try:
    from .cli import cli
    from .errors import CoverError
except ImportError as e:
    print(
        "Error: abelian-cover needs pydantic, click, python-dotenv and sympy. "
        f"Install them with 'poetry install'. Details: {e}",
        file=sys.stderr,
    )
    sys.exit(1)


def main() -> None:
    """Main entry point for the abelian-cover toolkit."""
    try:
        cli()
    except KeyboardInterrupt:
        print("\nComputation interrupted; no report written.", file=sys.stderr)
        sys.exit(130)
    except CoverError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(1)
    except Exception as e:
        print(f"Internal error ({type(e).__name__}): {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
