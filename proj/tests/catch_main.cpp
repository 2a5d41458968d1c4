// Compiles the amalgamated Catch2 implementation (which supplies main) once.
#include <catch2/catch_amalgamated.cpp>
