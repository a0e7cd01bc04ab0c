#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "l2interp/errors.hpp"
#include "l2interp/image.hpp"
#include "test_util.hpp"

using namespace l2i;

TEST_CASE("P2 parsing") {
    std::istringstream in("P2 2 2 255 0 64 128 255");
    const ImageBuffer img = read_pgm(in);
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.bit_depth == 8);
    CHECK(img.samples == std::vector<uint16_t>{0, 64, 128, 255});
}

TEST_CASE("P2 parsing with comments and odd whitespace") {
    std::istringstream in("P2\n# a comment\n2 1\n# another\n  255\n7\t9\n");
    const ImageBuffer img = read_pgm(in);
    CHECK(img.width == 2);
    CHECK(img.height == 1);
    CHECK(img.samples == std::vector<uint16_t>{7, 9});
}

TEST_CASE("P5 binary parsing, 8-bit") {
    std::string payload = "P5\n3 1\n255\n";
    payload += '\x01';
    payload += '\x80';
    payload += '\xff';
    std::istringstream in(payload);
    const ImageBuffer img = read_pgm(in);
    CHECK(img.bit_depth == 8);
    CHECK(img.samples == std::vector<uint16_t>{1, 128, 255});
}

TEST_CASE("P5 binary parsing, 16-bit big-endian") {
    std::string payload = "P5\n2 1\n4095\n";
    payload += '\x01';  // 0x0100 = 256
    payload += '\x00';
    payload += '\x0f';  // 0x0fff = 4095
    payload += '\xff';
    std::istringstream in(payload);
    const ImageBuffer img = read_pgm(in);
    CHECK(img.bit_depth == 16);  // maxval over 255 promotes the depth
    CHECK(img.samples == std::vector<uint16_t>{256, 4095});
}

TEST_CASE("reader rejections") {
    auto expect_fail = [](const std::string& payload) {
        std::istringstream in(payload);
        CHECK_THROWS_AS(read_pgm(in), IoError);
    };
    expect_fail("P6\n1 1\n255\nxxx");               // color
    expect_fail("P4\n1 1\n");                        // bitmap
    expect_fail("BM9");                              // not PNM at all
    expect_fail("P2 2 2 255 0 64 128");              // short payload
    expect_fail(std::string("P5\n2 1\n255\n") + 'a');  // truncated raster
    expect_fail("P2 1 1 0 0");                       // maxval 0
    expect_fail("P2 1 1 70000 1");                   // maxval too large
    expect_fail("P2 1 1 255 400");                   // sample exceeds maxval
    expect_fail("P2 -1 1 255 0");                    // bad dimensions
    expect_fail("P2 two 2 255 0");                   // non-numeric field
}

TEST_CASE("round trips are bit-exact") {
    std::mt19937 rng(7);
    for (int depth : {8, 16}) {
        const ImageBuffer img = testutil::random_image(rng, 13, 9, depth);
        std::stringstream buf;
        write_pgm(img, buf);
        const ImageBuffer back = read_pgm(buf);
        CAPTURE(depth);
        CHECK(back == img);
    }
}

TEST_CASE("writer format details") {
    ImageBuffer img(2, 1, 8);
    img.at(0, 0) = 10;
    img.at(0, 1) = 255;
    std::stringstream buf;
    write_pgm(img, buf);
    const std::string bytes = buf.str();
    CHECK(bytes.substr(0, 11) == "P5\n2 1\n255\n");
    CHECK(bytes.size() == 11 + 2);

    ImageBuffer wide(1, 1, 16);
    wide.at(0, 0) = 0x0102;
    std::stringstream buf16;
    write_pgm(wide, buf16);
    const std::string b16 = buf16.str();
    CHECK(b16.substr(0, 13) == "P5\n1 1\n65535\n");
    CHECK(static_cast<unsigned char>(b16[13]) == 0x01);  // big-endian sample
    CHECK(static_cast<unsigned char>(b16[14]) == 0x02);
}

TEST_CASE("file level round trip") {
    std::mt19937 rng(11);
    const ImageBuffer img = testutil::random_image(rng, 17, 5, 16);
    const auto path = testutil::temp_file("pgm-roundtrip");
    write_pgm(img, path.string());
    CHECK(read_pgm(path.string()) == img);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_pgm(path.string()), IoError);
}

TEST_CASE("comparison metrics") {
    ImageBuffer a(2, 2, 8);
    ImageBuffer b(2, 2, 8);
    a.samples = {10, 20, 30, 40};
    b.samples = {10, 22, 30, 34};
    CHECK(image_mae(a, b) == doctest::Approx(2.0));
    CHECK(image_max_abs(a, b) == 6);
    const double mse = (0.0 + 4.0 + 0.0 + 36.0) / 4.0;
    CHECK(image_psnr(a, b) == doctest::Approx(10.0 * std::log10(255.0 * 255.0 / mse)));
    CHECK(std::isinf(image_psnr(a, a)));
    CHECK(image_max_abs(a, a) == 0);

    ImageBuffer c(3, 2, 8);
    CHECK_THROWS_AS(image_mae(a, c), std::invalid_argument);
}
