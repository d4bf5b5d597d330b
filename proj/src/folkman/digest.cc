#include <folkman/digest.hh>
#include <folkman/errors.hh>

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

namespace folkman
{
    namespace
    {
        struct Hasher
        {
            std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx{EVP_MD_CTX_new(), &EVP_MD_CTX_free};

            Hasher()
            {
                if (! ctx || 1 != EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr))
                    throw FolkmanError("cannot initialise SHA-256");
            }

            auto update(const char * data, std::size_t size) -> void
            {
                if (1 != EVP_DigestUpdate(ctx.get(), data, size))
                    throw FolkmanError("SHA-256 update failed");
            }

            auto finish() -> std::string
            {
                std::array<unsigned char, EVP_MAX_MD_SIZE> out;
                unsigned int length = 0;
                if (1 != EVP_DigestFinal_ex(ctx.get(), out.data(), &length))
                    throw FolkmanError("SHA-256 finalisation failed");
                static constexpr char hex[] = "0123456789abcdef";
                std::string result;
                for (unsigned i = 0 ; i < length ; ++i) {
                    result += hex[out[i] >> 4];
                    result += hex[out[i] & 15];
                }
                return result;
            }
        };
    }

    auto sha256_hex(std::string_view data) -> std::string
    {
        Hasher h;
        h.update(data.data(), data.size());
        return h.finish();
    }

    auto sha256_file(const std::filesystem::path & file) -> std::string
    {
        std::ifstream in{file, std::ios::binary};
        if (! in)
            throw StoreError("cannot read " + file.string());
        Hasher h;
        std::array<char, 1 << 16> buffer;
        while (in) {
            in.read(buffer.data(), buffer.size());
            h.update(buffer.data(), std::size_t(in.gcount()));
        }
        return h.finish();
    }
}
