from .__header__ import main

if __name__ == "__main__":
    main()
