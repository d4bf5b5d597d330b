#ifndef FOLKMAN_GUARD_ERRORS_HH
#define FOLKMAN_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace folkman
{
    // Every exception the library throws derives from this.
    class FolkmanError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class InvalidGraph : public FolkmanError
    {
        public:
            using FolkmanError::FolkmanError;
    };

    class Graph6Error : public FolkmanError
    {
        public:
            using FolkmanError::FolkmanError;
    };

    class CapacityExceeded : public FolkmanError
    {
        public:
            using FolkmanError::FolkmanError;
    };

    class PreconditionViolated : public FolkmanError
    {
        public:
            using FolkmanError::FolkmanError;
    };

    class StoreError : public FolkmanError
    {
        public:
            using FolkmanError::FolkmanError;
    };

    class ManifestMismatch : public FolkmanError
    {
        public:
            using FolkmanError::FolkmanError;
    };

    class WitnessError : public FolkmanError
    {
        public:
            using FolkmanError::FolkmanError;
    };

    class SolverError : public FolkmanError
    {
        public:
            using FolkmanError::FolkmanError;
    };
}

#endif
