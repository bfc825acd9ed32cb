const ENGINE_MODULE_B64 = "InVzZSBzdHJpY3QiOwovKioKICogU2VsZi1jb250YWluZWQgZW5naW5lIG1vZHVsZSBmb3IgdGhlIHJlbmRlciBzY29wZTogb3JjaGVzdHJhIGxhbmd1YWdlLAogKiBzY29yZSBwYXJzaW5nLCBibG9jayBlbmdpbmUsIGFuZCB0aGUgcHJvY2Vzc29yIGNvcmUgKGNudCBhdXRvbWF0b24gKwogKiBtZXNzYWdlIGhhbmRsaW5nIG92ZXIgdGhlIHdpcmUgc2NoZW1hKS4KICoKICogTm8gaW1wb3J0cy9leHBvcnRzOiB0aGUgY29tcGlsZWQgb3V0cHV0IGlzIGEgcGxhaW4gc2NyaXB0IHNvIGl0IGNhbiBiZQogKiBpbnN0YW50aWF0ZWQgc3luY2hyb25vdXNseSBmcm9tIHBhY2thZ2VkIGJ5dGVzIGluc2lkZSB0aGUgYXVkaW8gcmVuZGVyCiAqIHNjb3BlICh3aGljaCBoYXMgbm8gbG9hZGluZyBmYWNpbGl0aWVzKS4gVGhlIG1vZHVsZSByZWdpc3RlcnMgaXRzZWxmIGFzCiAqIGdsb2JhbFRoaXMuX19ibG9ja3N5bnRoRW5naW5lTW9kdWxlLgogKi8KKCgpID0+IHsKICAgIGlmIChnbG9iYWxUaGlzLl9fYmxvY2tzeW50aEVuZ2luZU1vZHVsZSkKICAgICAgICByZXR1cm47CiAgICBjb25zdCBUV09fUEkgPSAyICogTWF0aC5QSTsKICAgIGNvbnN0IEZSQU1FX0VQUyA9IDFlLTk7CiAgICBjb25zdCBkaWFnID0gKGxpbmUsIGNvbHVtbiwgbWVzc2FnZSkgPT4gKHsgbGluZSwgY29sdW1uLCBtZXNzYWdlIH0pOwogICAgZnVuY3Rpb24gdmFsaWRhdGVDb25maWcoYykgewogICAgICAgIGlmIChjLnNyIDwgMSB8fCBjLmtzbXBzIDwgMSB8fCBjLm5jaG5scyA8IDEgfHwgYy5uY2hubHNJbiA8IDAgfHwgIShjLnplcm9kYmZzID4gMCkpIHsKICAgICAgICAgICAgdGhyb3cgbmV3IEVycm9yKCJpbnZhbGlkIGVuZ2luZSBjb25maWciKTsKICAgICAgICB9CiAgICB9CiAgICBjb25zdCBUT0tFTl9SRSA9IC8oWyBcdF0rKXwoO1teXG5dKil8KFxyP1xuKXwoKD86XGQrXC4/XGQqfFwuXGQrKSg/OltlRV1bKy1dP1xkKyk/KXwoW0EtWmEtel9dW0EtWmEtejAtOV9dKil8KCJbXiJcbl0qIil8KFsrXC0qLygpLD1dKS95OwogICAgY29uc3QgUkVTRVJWRUQgPSBuZXcgU2V0KFsiaW5zdHIiLCAiZW5kaW4iLCAib3V0IiwgIm9zY2lsIiwgImxpbmUiLCAiaW4iLCAiY2hhbiJdKTsKICAgIGZ1bmN0aW9uIHRva2VuaXplKHNvdXJjZSkgewogICAgICAgIGNvbnN0IHRva2VucyA9IFtdOwogICAgICAgIGxldCBsaW5lID0gMTsKICAgICAgICBsZXQgY29sID0gMTsKICAgICAgICBsZXQgcG9zID0gMDsKICAgICAgICB3aGlsZSAocG9zIDwgc291cmNlLmxlbmd0aCkgewogICAgICAgICAgICBUT0tFTl9SRS5sYXN0SW5kZXggPSBwb3M7CiAgICAgICAgICAgIGNvbnN0IG0gPSBUT0tFTl9SRS5leGVjKHNvdXJjZSk7CiAgICAgICAgICAgIGlmICghbSkgewogICAgICAgICAgICAgICAgdG9rZW5zLnB1c2goeyBraW5kOiAiZXJyb3IiLCB0ZXh0OiBzb3VyY2VbcG9zXSwgbGluZSwgY29sdW1uOiBjb2wgfSk7CiAgICAgICAgICAgICAgICBwb3MgKz0gMTsKICAgICAgICAgICAgICAgIGNvbCArPSAxOwogICAgICAgICAgICAgICAgY29udGludWU7CiAgICAgICAgICAgIH0KICAgICAgICAgICAgY29uc3QgdGV4dCA9IG1bMF07CiAgICAgICAgICAgIGlmIChtWzNdICE9PSB1bmRlZmluZWQpIHsKICAgICAgICAgICAgICAgIHRva2Vucy5wdXNoKHsga2luZDogIm5sIiwgdGV4dDogIlxuIiwgbGluZSwgY29sdW1uOiBjb2wgfSk7CiAgICAgICAgICAgICAgICBsaW5lICs9IDE7CiAgICAgICAgICAgICAgICBjb2wgPSAxOwogICAgICAgICAgICB9CiAgICAgICAgICAgIGVsc2UgaWYgKG1bMV0gIT09IHVuZGVmaW5lZCB8fCBtWzJdICE9PSB1bmRlZmluZWQpIHsKICAgICAgICAgICAgICAgIGNvbCArPSB0ZXh0Lmxlbmd0aDsKICAgICAgICAgICAgfQogICAgICAgICAgICBlbHNlIHsKICAgICAgICAgICAgICAgIGxldCBraW5kID0gIm9wIjsKICAgICAgICAgICAgICAgIGlmIChtWzRdICE9PSB1bmRlZmluZWQpCiAgICAgICAgICAgICAgICAgICAga2luZCA9ICJudW1iZXIiOwogICAgICAgICAgICAgICAgZWxzZSBpZiAobVs1XSAhPT0gdW5kZWZpbmVkKQogICAgICAgICAgICAgICAgICAgIGtpbmQgPSAvXnBcZCskLy50ZXN0KHRleHQpID8gInBmaWVsZCIgOiAiaWRlbnQiOwogICAgICAgICAgICAgICAgZWxzZSBpZiAobVs2XSAhPT0gdW5kZWZpbmVkKQogICAgICAgICAgICAgICAgICAgIGtpbmQgPSAic3RyaW5nIjsKICAgICAgICAgICAgICAgIHRva2Vucy5wdXNoKHsga2luZCwgdGV4dCwgbGluZSwgY29sdW1uOiBjb2wgfSk7CiAgICAgICAgICAgICAgICBjb2wgKz0gdGV4dC5sZW5ndGg7CiAgICAgICAgICAgIH0KICAgICAgICAgICAgcG9zID0gbS5pbmRleCArIHRleHQubGVuZ3RoOwogICAgICAgIH0KICAgICAgICB0b2tlbnMucHVzaCh7IGtpbmQ6ICJlb2YiLCB0ZXh0OiAiIiwgbGluZSwgY29sdW1uOiBjb2wgfSk7CiAgICAgICAgcmV0dXJuIHRva2VuczsKICAgIH0KICAgIGNsYXNzIFBhcnNlQWJvcnQgZXh0ZW5kcyBFcnJvciB7CiAgICB9CiAgICBjbGFzcyBQYXJzZXIgewogICAgICAgIGNvbnN0cnVjdG9yKHRva2VucykgewogICAgICAgICAgICB0aGlzLnBvcyA9IDA7CiAgICAgICAgICAgIHRoaXMuZGlhZ25vc3RpY3MgPSBbXTsKICAgICAgICAgICAgdGhpcy50b2tlbnMgPSB0b2tlbnM7CiAgICAgICAgfQogICAgICAgIHBlZWsoKSB7IHJldHVybiB0aGlzLnRva2Vuc1t0aGlzLnBvc107IH0KICAgICAgICBhZHZhbmNlKCkgewogICAgICAgICAgICBjb25zdCB0b2sgPSB0aGlzLnRva2Vuc1t0aGlzLnBvc107CiAgICAgICAgICAgIGlmICh0b2sua2luZCAhPT0gImVvZiIpCiAgICAgICAgICAgICAgICB0aGlzLnBvcyArPSAxOwogICAgICAgICAgICByZXR1cm4gdG9rOwogICAgICAgIH0KICAgICAgICBmYWlsKHRvaywgbWVzc2FnZSkgewogICAgICAgICAgICB0aGlzLmRpYWdub3N0aWNzLnB1c2goZGlhZyh0b2subGluZSwgdG9rLmNvbHVtbiwgbWVzc2FnZSkpOwogICAgICAgICAgICByZXR1cm4gbmV3IFBhcnNlQWJvcnQobWVzc2FnZSk7CiAgICAgICAgfQogICAgICAgIHNraXBOZXdsaW5lcygpIHsKICAgICAgICAgICAgd2hpbGUgKHRoaXMucGVlaygpLmtpbmQgPT09ICJubCIpCiAgICAgICAgICAgICAgICB0aGlzLmFkdmFuY2UoKTsKICAgICAgICB9CiAgICAgICAgc2tpcFRvTmV3bGluZSgpIHsKICAgICAgICAgICAgd2hpbGUgKHRoaXMucGVlaygpLmtpbmQgIT09ICJubCIgJiYgdGhpcy5wZWVrKCkua2luZCAhPT0gImVvZiIpCiAgICAgICAgICAgICAgICB0aGlzLmFkdmFuY2UoKTsKICAgICAgICB9CiAgICAgICAgZXhwZWN0T3AoY2gpIHsKICAgICAgICAgICAgY29uc3QgdG9rID0gdGhpcy5wZWVrKCk7CiAgICAgICAgICAgIGlmICh0b2sua2luZCA9PT0gIm9wIiAmJiB0b2sudGV4dCA9PT0gY2gpIHsKICAgICAgICAgICAgICAgIHRoaXMuYWR2YW5jZSgpOwogICAgICAgICAgICAgICAgcmV0dXJuOwogICAgICAgICAgICB9CiAgICAgICAgICAgIHRocm93IHRoaXMuZmFpbCh0b2ssIGBleHBlY3RlZCAnJHtjaH0nYCk7CiAgICAgICAgfQogICAgICAgIHBhcnNlUHJvZ3JhbSgpIHsKICAgICAgICAgICAgY29uc3Qgb3V0ID0gW107CiAgICAgICAgICAgIGZvciAoOzspIHsKICAgICAgICAgICAgICAgIHRoaXMuc2tpcE5ld2xpbmVzKCk7CiAgICAgICAgICAgICAgICBjb25zdCB0b2sgPSB0aGlzLnBlZWsoKTsKICAgICAgICAgICAgICAgIGlmICh0b2sua2luZCA9PT0gImVvZiIpCiAgICAgICAgICAgICAgICAgICAgcmV0dXJuIG91dDsKICAgICAgICAgICAgICAgIGlmICh0b2sua2luZCA9PT0gImlkZW50IiAmJiB0b2sudGV4dCA9PT0gImluc3RyIikgewogICAgICAgICAgICAgICAgICAgIGNvbnN0IGluc3RyID0gdGhpcy5wYXJzZUluc3RyKCk7CiAgICAgICAgICAgICAgICAgICAgaWYgKGluc3RyKQogICAgICAgICAgICAgICAgICAgICAgICBvdXQucHVzaChpbnN0cik7CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICBlbHNlIHsKICAgICAgICAgICAgICAgICAgICB0aGlzLmRpYWdub3N0aWNzLnB1c2goZGlhZyh0b2subGluZSwgdG9rLmNvbHVtbiwgImV4cGVjdGVkICdpbnN0ciciKSk7CiAgICAgICAgICAgICAgICAgICAgdGhpcy5za2lwVG9OZXdsaW5lKCk7CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgIH0KICAgICAgICB9CiAgICAgICAgcGFyc2VJbnN0cigpIHsKICAgICAgICAgICAgY29uc3QgaGVhZGVyID0gdGhpcy5hZHZhbmNlKCk7CiAgICAgICAgICAgIGNvbnN0IHRvayA9IHRoaXMucGVlaygpOwogICAgICAgICAgICBpZiAodG9rLmtpbmQgIT09ICJudW1iZXIiIHx8ICEvXlxkKyQvLnRlc3QodG9rLnRleHQpIHx8IHBhcnNlSW50KHRvay50ZXh0LCAxMCkgPCAxKSB7CiAgICAgICAgICAgICAgICB0aGlzLmRpYWdub3N0aWNzLnB1c2goZGlhZyh0b2subGluZSwgdG9rLmNvbHVtbiwgImluc3RydW1lbnQgbnVtYmVyIG11c3QgYmUgYSBwb3NpdGl2ZSBpbnRlZ2VyIikpOwogICAgICAgICAgICAgICAgdGhpcy5za2lwVG9FbmRpbigpOwogICAgICAgICAgICAgICAgcmV0dXJuIG51bGw7CiAgICAgICAgICAgIH0KICAgICAgICAgICAgY29uc3QgbnVtYmVyID0gcGFyc2VJbnQodGhpcy5hZHZhbmNlKCkudGV4dCwgMTApOwogICAgICAgICAgICBjb25zdCBib2R5ID0gW107CiAgICAgICAgICAgIGxldCBiYWQgPSBmYWxzZTsKICAgICAgICAgICAgZm9yICg7OykgewogICAgICAgICAgICAgICAgdGhpcy5za2lwTmV3bGluZXMoKTsKICAgICAgICAgICAgICAgIGNvbnN0IHQgPSB0aGlzLnBlZWsoKTsKICAgICAgICAgICAgICAgIGlmICh0LmtpbmQgPT09ICJlb2YiKSB7CiAgICAgICAgICAgICAgICAgICAgdGhpcy5kaWFnbm9zdGljcy5wdXNoKGRpYWcoaGVhZGVyLmxpbmUsIGhlYWRlci5jb2x1bW4sICInaW5zdHInIHdpdGhvdXQgbWF0Y2hpbmcgJ2VuZGluJyIpKTsKICAgICAgICAgICAgICAgICAgICByZXR1cm4gbnVsbDsKICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIGlmICh0LmtpbmQgPT09ICJpZGVudCIgJiYgdC50ZXh0ID09PSAiZW5kaW4iKSB7CiAgICAgICAgICAgICAgICAgICAgdGhpcy5hZHZhbmNlKCk7CiAgICAgICAgICAgICAgICAgICAgcmV0dXJuIGJhZCA/IG51bGwgOiB7IG51bWJlciwgYm9keSwgbGluZTogaGVhZGVyLmxpbmUgfTsKICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIHRyeSB7CiAgICAgICAgICAgICAgICAgICAgYm9keS5wdXNoKHRoaXMucGFyc2VTdG10KCkpOwogICAgICAgICAgICAgICAgICAgIGNvbnN0IG54dCA9IHRoaXMucGVlaygpOwogICAgICAgICAgICAgICAgICAgIGlmIChueHQua2luZCAhPT0gIm5sIiAmJiBueHQua2luZCAhPT0gImVvZiIpIHsKICAgICAgICAgICAgICAgICAgICAgICAgdGhyb3cgdGhpcy5mYWlsKG54dCwgYHVuZXhwZWN0ZWQgJyR7bnh0LnRleHR9JyBhZnRlciBzdGF0ZW1lbnRgKTsKICAgICAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICBjYXRjaCAoZSkgewogICAgICAgICAgICAgICAgICAgIGlmICghKGUgaW5zdGFuY2VvZiBQYXJzZUFib3J0KSkKICAgICAgICAgICAgICAgICAgICAgICAgdGhyb3cgZTsKICAgICAgICAgICAgICAgICAgICBiYWQgPSB0cnVlOwogICAgICAgICAgICAgICAgICAgIHRoaXMuc2tpcFRvTmV3bGluZSgpOwogICAgICAgICAgICAgICAgfQogICAgICAgICAgICB9CiAgICAgICAgfQogICAgICAgIHNraXBUb0VuZGluKCkgewogICAgICAgICAgICBmb3IgKDs7KSB7CiAgICAgICAgICAgICAgICBjb25zdCB0b2sgPSB0aGlzLnBlZWsoKTsKICAgICAgICAgICAgICAgIGlmICh0b2sua2luZCA9PT0gImVvZiIpCiAgICAgICAgICAgICAgICAgICAgcmV0dXJuOwogICAgICAgICAgICAgICAgdGhpcy5hZHZhbmNlKCk7CiAgICAgICAgICAgICAgICBpZiAodG9rLmtpbmQgPT09ICJpZGVudCIgJiYgdG9rLnRleHQgPT09ICJlbmRpbiIpCiAgICAgICAgICAgICAgICAgICAgcmV0dXJuOwogICAgICAgICAgICB9CiAgICAgICAgfQogICAgICAgIHBhcnNlU3RtdCgpIHsKICAgICAgICAgICAgY29uc3QgdG9rID0gdGhpcy5wZWVrKCk7CiAgICAgICAgICAgIGlmICh0b2sua2luZCA9PT0gImlkZW50IiAmJiB0b2sudGV4dCA9PT0gIm91dCIpIHsKICAgICAgICAgICAgICAgIHRoaXMuYWR2YW5jZSgpOwogICAgICAgICAgICAgICAgY29uc3QgZXhwcnMgPSBbdGhpcy5wYXJzZUV4cHIoKV07CiAgICAgICAgICAgICAgICB3aGlsZSAodGhpcy5wZWVrKCkua2luZCA9PT0gIm9wIiAmJiB0aGlzLnBlZWsoKS50ZXh0ID09PSAiLCIpIHsKICAgICAgICAgICAgICAgICAgICB0aGlzLmFkdmFuY2UoKTsKICAgICAgICAgICAgICAgICAgICBleHBycy5wdXNoKHRoaXMucGFyc2VFeHByKCkpOwogICAgICAgICAgICAgICAgfQogICAgICAgICAgICAgICAgcmV0dXJuIHsgdDogIm91dCIsIGV4cHJzLCBsaW5lOiB0b2subGluZSwgY29sdW1uOiB0b2suY29sdW1uIH07CiAgICAgICAgICAgIH0KICAgICAgICAgICAgaWYgKHRvay5raW5kID09PSAiaWRlbnQiKSB7CiAgICAgICAgICAgICAgICBpZiAoUkVTRVJWRUQuaGFzKHRvay50ZXh0KSkKICAgICAgICAgICAgICAgICAgICB0aHJvdyB0aGlzLmZhaWwodG9rLCBgJyR7dG9rLnRleHR9JyBpcyByZXNlcnZlZGApOwogICAgICAgICAgICAgICAgY29uc3QgbmFtZSA9IHRoaXMuYWR2YW5jZSgpLnRleHQ7CiAgICAgICAgICAgICAgICB0aGlzLmV4cGVjdE9wKCI9Iik7CiAgICAgICAgICAgICAgICByZXR1cm4geyB0OiAiYXNzaWduIiwgbmFtZSwgZXhwcjogdGhpcy5wYXJzZUV4cHIoKSwgbGluZTogdG9rLmxpbmUsIGNvbHVtbjogdG9rLmNvbHVtbiB9OwogICAgICAgICAgICB9CiAgICAgICAgICAgIHRocm93IHRoaXMuZmFpbCh0b2ssIGBleHBlY3RlZCBhIHN0YXRlbWVudCwgZm91bmQgJyR7dG9rLnRleHQgfHwgdG9rLmtpbmR9J2ApOwogICAgICAgIH0KICAgICAgICBwYXJzZUV4cHIoKSB7CiAgICAgICAgICAgIGxldCBsZWZ0ID0gdGhpcy5wYXJzZVRlcm0oKTsKICAgICAgICAgICAgd2hpbGUgKHRoaXMucGVlaygpLmtpbmQgPT09ICJvcCIgJiYgKHRoaXMucGVlaygpLnRleHQgPT09ICIrIiB8fCB0aGlzLnBlZWsoKS50ZXh0ID09PSAiLSIpKSB7CiAgICAgICAgICAgICAgICBjb25zdCBvcCA9IHRoaXMuYWR2YW5jZSgpLnRleHQ7CiAgICAgICAgICAgICAgICBsZWZ0ID0geyB0OiAiYmluIiwgb3AsIGxlZnQsIHJpZ2h0OiB0aGlzLnBhcnNlVGVybSgpIH07CiAgICAgICAgICAgIH0KICAgICAgICAgICAgcmV0dXJuIGxlZnQ7CiAgICAgICAgfQogICAgICAgIHBhcnNlVGVybSgpIHsKICAgICAgICAgICAgbGV0IGxlZnQgPSB0aGlzLnBhcnNlRmFjdG9yKCk7CiAgICAgICAgICAgIHdoaWxlICh0aGlzLnBlZWsoKS5raW5kID09PSAib3AiICYmICh0aGlzLnBlZWsoKS50ZXh0ID09PSAiKiIgfHwgdGhpcy5wZWVrKCkudGV4dCA9PT0gIi8iKSkgewogICAgICAgICAgICAgICAgY29uc3Qgb3AgPSB0aGlzLmFkdmFuY2UoKS50ZXh0OwogICAgICAgICAgICAgICAgbGVmdCA9IHsgdDogImJpbiIsIG9wLCBsZWZ0LCByaWdodDogdGhpcy5wYXJzZUZhY3RvcigpIH07CiAgICAgICAgICAgIH0KICAgICAgICAgICAgcmV0dXJuIGxlZnQ7CiAgICAgICAgfQogICAgICAgIHBhcnNlRmFjdG9yKCkgewogICAgICAgICAgICBjb25zdCB0b2sgPSB0aGlzLnBlZWsoKTsKICAgICAgICAgICAgaWYgKHRvay5raW5kID09PSAibnVtYmVyIikgewogICAgICAgICAgICAgICAgdGhpcy5hZHZhbmNlKCk7CiAgICAgICAgICAgICAgICByZXR1cm4geyB0OiAibnVtIiwgdmFsdWU6IHBhcnNlRmxvYXQodG9rLnRleHQpIH07CiAgICAgICAgICAgIH0KICAgICAgICAgICAgaWYgKHRvay5raW5kID09PSAicGZpZWxkIikgewogICAgICAgICAgICAgICAgdGhpcy5hZHZhbmNlKCk7CiAgICAgICAgICAgICAgICBjb25zdCBpbmRleCA9IHBhcnNlSW50KHRvay50ZXh0LnNsaWNlKDEpLCAxMCk7CiAgICAgICAgICAgICAgICBpZiAoaW5kZXggPCAxKQogICAgICAgICAgICAgICAgICAgIHRocm93IHRoaXMuZmFpbCh0b2ssICJwLWZpZWxkIGluZGV4IG11c3QgYmUgMSBvciBncmVhdGVyIik7CiAgICAgICAgICAgICAgICByZXR1cm4geyB0OiAicGZpZWxkIiwgaW5kZXggfTsKICAgICAgICAgICAgfQogICAgICAgICAgICBpZiAodG9rLmtpbmQgPT09ICJvcCIgJiYgdG9rLnRleHQgPT09ICIoIikgewogICAgICAgICAgICAgICAgdGhpcy5hZHZhbmNlKCk7CiAgICAgICAgICAgICAgICBjb25zdCBpbm5lciA9IHRoaXMucGFyc2VFeHByKCk7CiAgICAgICAgICAgICAgICB0aGlzLmV4cGVjdE9wKCIpIik7CiAgICAgICAgICAgICAgICByZXR1cm4gaW5uZXI7CiAgICAgICAgICAgIH0KICAgICAgICAgICAgaWYgKHRvay5raW5kID09PSAiaWRlbnQiKSB7CiAgICAgICAgICAgICAgICBjb25zdCBuYW1lID0gdG9rLnRleHQ7CiAgICAgICAgICAgICAgICBpZiAobmFtZSA9PT0gIm9zY2lsIiB8fCBuYW1lID09PSAibGluZSIgfHwgbmFtZSA9PT0gImluIiB8fCBuYW1lID09PSAiY2hhbiIpIHsKICAgICAgICAgICAgICAgICAgICByZXR1cm4gdGhpcy5wYXJzZUNhbGwobmFtZSk7CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICBpZiAoUkVTRVJWRUQuaGFzKG5hbWUpKQogICAgICAgICAgICAgICAgICAgIHRocm93IHRoaXMuZmFpbCh0b2ssIGAnJHtuYW1lfScgaXMgcmVzZXJ2ZWRgKTsKICAgICAgICAgICAgICAgIHRoaXMuYWR2YW5jZSgpOwogICAgICAgICAgICAgICAgcmV0dXJuIHsgdDogInZhciIsIG5hbWUgfTsKICAgICAgICAgICAgfQogICAgICAgICAgICB0aHJvdyB0aGlzLmZhaWwodG9rLCBgZXhwZWN0ZWQgYW4gZXhwcmVzc2lvbiwgZm91bmQgJyR7dG9rLnRleHQgfHwgdG9rLmtpbmR9J2ApOwogICAgICAgIH0KICAgICAgICBwYXJzZUNhbGwobmFtZSkgewogICAgICAgICAgICBjb25zdCB0b2sgPSB0aGlzLmFkdmFuY2UoKTsKICAgICAgICAgICAgdGhpcy5leHBlY3RPcCgiKCIpOwogICAgICAgICAgICBpZiAobmFtZSA9PT0gImluIikgewogICAgICAgICAgICAgICAgY29uc3QgYXJnID0gdGhpcy5wZWVrKCk7CiAgICAgICAgICAgICAgICBpZiAoYXJnLmtpbmQgIT09ICJudW1iZXIiIHx8ICEvXlxkKyQvLnRlc3QoYXJnLnRleHQpKSB7CiAgICAgICAgICAgICAgICAgICAgdGhyb3cgdGhpcy5mYWlsKGFyZywgImluKCkgdGFrZXMgYW4gaW50ZWdlciBjaGFubmVsIik7CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICB0aGlzLmFkdmFuY2UoKTsKICAgICAgICAgICAgICAgIHRoaXMuZXhwZWN0T3AoIikiKTsKICAgICAgICAgICAgICAgIHJldHVybiB7IHQ6ICJpbiIsIGNoYW5uZWw6IHBhcnNlSW50KGFyZy50ZXh0LCAxMCkgfTsKICAgICAgICAgICAgfQogICAgICAgICAgICBpZiAobmFtZSA9PT0gImNoYW4iKSB7CiAgICAgICAgICAgICAgICBjb25zdCBhcmcgPSB0aGlzLnBlZWsoKTsKICAgICAgICAgICAgICAgIGlmIChhcmcua2luZCAhPT0gInN0cmluZyIpCiAgICAgICAgICAgICAgICAgICAgdGhyb3cgdGhpcy5mYWlsKGFyZywgImNoYW4oKSB0YWtlcyBhIHF1b3RlZCBjaGFubmVsIG5hbWUiKTsKICAgICAgICAgICAgICAgIHRoaXMuYWR2YW5jZSgpOwogICAgICAgICAgICAgICAgY29uc3QgY2hhbk5hbWUgPSBhcmcudGV4dC5zbGljZSgxLCAtMSk7CiAgICAgICAgICAgICAgICBpZiAoIWNoYW5OYW1lKQogICAgICAgICAgICAgICAgICAgIHRocm93IHRoaXMuZmFpbChhcmcsICJjaGFubmVsIG5hbWUgbXVzdCBiZSBub24tZW1wdHkiKTsKICAgICAgICAgICAgICAgIHRoaXMuZXhwZWN0T3AoIikiKTsKICAgICAgICAgICAgICAgIHJldHVybiB7IHQ6ICJjaGFuIiwgbmFtZTogY2hhbk5hbWUgfTsKICAgICAgICAgICAgfQogICAgICAgICAgICBjb25zdCBhcmdzID0gW3RoaXMucGFyc2VFeHByKCldOwogICAgICAgICAgICB3aGlsZSAodGhpcy5wZWVrKCkua2luZCA9PT0gIm9wIiAmJiB0aGlzLnBlZWsoKS50ZXh0ID09PSAiLCIpIHsKICAgICAgICAgICAgICAgIHRoaXMuYWR2YW5jZSgpOwogICAgICAgICAgICAgICAgYXJncy5wdXNoKHRoaXMucGFyc2VFeHByKCkpOwogICAgICAgICAgICB9CiAgICAgICAgICAgIHRoaXMuZXhwZWN0T3AoIikiKTsKICAgICAgICAgICAgaWYgKG5hbWUgPT09ICJvc2NpbCIpIHsKICAgICAgICAgICAgICAgIGlmIChhcmdzLmxlbmd0aCAhPT0gMikKICAgICAgICAgICAgICAgICAgICB0aHJvdyB0aGlzLmZhaWwodG9rLCAib3NjaWwoKSB0YWtlcyBleGFjdGx5IDIgYXJndW1lbnRzIik7CiAgICAgICAgICAgICAgICByZXR1cm4geyB0OiAib3NjaWwiLCBhbXA6IGFyZ3NbMF0sIGZyZXE6IGFyZ3NbMV0gfTsKICAgICAgICAgICAgfQogICAgICAgICAgICBpZiAoYXJncy5sZW5ndGggIT09IDMpCiAgICAgICAgICAgICAgICB0aHJvdyB0aGlzLmZhaWwodG9rLCAibGluZSgpIHRha2VzIGV4YWN0bHkgMyBhcmd1bWVudHMiKTsKICAgICAgICAgICAgcmV0dXJuIHsgdDogImxpbmUiLCBhOiBhcmdzWzBdLCBkdXI6IGFyZ3NbMV0sIGI6IGFyZ3NbMl0gfTsKICAgICAgICB9CiAgICB9CiAgICBmdW5jdGlvbiBwYXJzZU9yY2hlc3RyYShzb3VyY2UpIHsKICAgICAgICBjb25zdCBwYXJzZXIgPSBuZXcgUGFyc2VyKHRva2VuaXplKHNvdXJjZSkpOwogICAgICAgIGNvbnN0IGluc3RydW1lbnRzID0gcGFyc2VyLnBhcnNlUHJvZ3JhbSgpOwogICAgICAgIHJldHVybiB7IGluc3RydW1lbnRzLCBkaWFnbm9zdGljczogcGFyc2VyLmRpYWdub3N0aWNzIH07CiAgICB9CiAgICAvLyAtLS0tIHNlbWFudGljIGNoZWNrcyAtLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0KICAgIGNvbnN0IEJVSUxUSU5TID0gWyJzciIsICJrc21wcyIsICJuY2hubHMiLCAibmNobmxzX2kiLCAiemVyb2RiZnMiXTsKICAgIGZ1bmN0aW9uIGNoZWNrSW5zdHJ1bWVudChpbnN0ciwgbmNobmxzLCBuY2hubHNJbikgewogICAgICAgIGNvbnN0IGRpYWdzID0gW107CiAgICAgICAgY29uc3QgYXNzaWduZWQgPSBuZXcgU2V0KEJVSUxUSU5TKTsKICAgICAgICBsZXQgb3V0U2VlbiA9IGZhbHNlOwogICAgICAgIGNvbnN0IHdhbGsgPSAobm9kZSwgbGluZSwgY29sdW1uKSA9PiB7CiAgICAgICAgICAgIHN3aXRjaCAobm9kZS50KSB7CiAgICAgICAgICAgICAgICBjYXNlICJ2YXIiOgogICAgICAgICAgICAgICAgICAgIGlmICghYXNzaWduZWQuaGFzKG5vZGUubmFtZSkpIHsKICAgICAgICAgICAgICAgICAgICAgICAgZGlhZ3MucHVzaChkaWFnKGxpbmUsIGNvbHVtbiwgYHVua25vd24gaWRlbnRpZmllciAnJHtub2RlLm5hbWV9J2ApKTsKICAgICAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICAgICAgYnJlYWs7CiAgICAgICAgICAgICAgICBjYXNlICJiaW4iOgogICAgICAgICAgICAgICAgICAgIHdhbGsobm9kZS5sZWZ0LCBsaW5lLCBjb2x1bW4pOwogICAgICAgICAgICAgICAgICAgIHdhbGsobm9kZS5yaWdodCwgbGluZSwgY29sdW1uKTsKICAgICAgICAgICAgICAgICAgICBicmVhazsKICAgICAgICAgICAgICAgIGNhc2UgIm9zY2lsIjoKICAgICAgICAgICAgICAgICAgICB3YWxrKG5vZGUuYW1wLCBsaW5lLCBjb2x1bW4pOwogICAgICAgICAgICAgICAgICAgIHdhbGsobm9kZS5mcmVxLCBsaW5lLCBjb2x1bW4pOwogICAgICAgICAgICAgICAgICAgIGJyZWFrOwogICAgICAgICAgICAgICAgY2FzZSAibGluZSI6CiAgICAgICAgICAgICAgICAgICAgd2Fsayhub2RlLmEsIGxpbmUsIGNvbHVtbik7CiAgICAgICAgICAgICAgICAgICAgd2Fsayhub2RlLmR1ciwgbGluZSwgY29sdW1uKTsKICAgICAgICAgICAgICAgICAgICB3YWxrKG5vZGUuYiwgbGluZSwgY29sdW1uKTsKICAgICAgICAgICAgICAgICAgICBicmVhazsKICAgICAgICAgICAgICAgIGNhc2UgImluIjoKICAgICAgICAgICAgICAgICAgICBpZiAobm9kZS5jaGFubmVsID49IG5jaG5sc0luKSB7CiAgICAgICAgICAgICAgICAgICAgICAgIGRpYWdzLnB1c2goZGlhZyhsaW5lLCBjb2x1bW4sIGBpbigke25vZGUuY2hhbm5lbH0pIG91dCBvZiByYW5nZTogZW5naW5lIGhhcyAke25jaG5sc0lufSBpbnB1dCBjaGFubmVsKHMpYCkpOwogICAgICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgICAgICBicmVhazsKICAgICAgICAgICAgICAgIGRlZmF1bHQ6CiAgICAgICAgICAgICAgICAgICAgYnJlYWs7CiAgICAgICAgICAgIH0KICAgICAgICB9OwogICAgICAgIGZvciAoY29uc3Qgc3RtdCBvZiBpbnN0ci5ib2R5KSB7CiAgICAgICAgICAgIGlmIChzdG10LnQgPT09ICJhc3NpZ24iKSB7CiAgICAgICAgICAgICAgICB3YWxrKHN0bXQuZXhwciwgc3RtdC5saW5lLCBzdG10LmNvbHVtbik7CiAgICAgICAgICAgICAgICBhc3NpZ25lZC5hZGQoc3RtdC5uYW1lKTsKICAgICAgICAgICAgfQogICAgICAgICAgICBlbHNlIHsKICAgICAgICAgICAgICAgIGlmIChvdXRTZWVuKQogICAgICAgICAgICAgICAgICAgIGRpYWdzLnB1c2goZGlhZyhzdG10LmxpbmUsIHN0bXQuY29sdW1uLCAibW9yZSB0aGFuIG9uZSBvdXQgc3RhdGVtZW50IikpOwogICAgICAgICAgICAgICAgb3V0U2VlbiA9IHRydWU7CiAgICAgICAgICAgICAgICBpZiAoc3RtdC5leHBycy5sZW5ndGggPiBuY2hubHMpIHsKICAgICAgICAgICAgICAgICAgICBkaWFncy5wdXNoKGRpYWcoc3RtdC5saW5lLCBzdG10LmNvbHVtbiwgYG91dCBoYXMgJHtzdG10LmV4cHJzLmxlbmd0aH0gY2hhbm5lbHMgYnV0IGVuZ2luZSBoYXMgJHtuY2hubHN9YCkpOwogICAgICAgICAgICAgICAgfQogICAgICAgICAgICAgICAgZm9yIChjb25zdCBlIG9mIHN0bXQuZXhwcnMpCiAgICAgICAgICAgICAgICAgICAgd2FsayhlLCBzdG10LmxpbmUsIHN0bXQuY29sdW1uKTsKICAgICAgICAgICAgfQogICAgICAgIH0KICAgICAgICByZXR1cm4gZGlhZ3M7CiAgICB9CiAgICBmdW5jdGlvbiBjb21waWxlSW5zdHJ1bWVudChpbnN0ciwgY2ZnKSB7CiAgICAgICAgY29uc3Qgc2xvdHMgPSBuZXcgTWFwKCk7CiAgICAgICAgY29uc3QgY2hhbk5hbWVzID0gW107CiAgICAgICAgbGV0IG5zdGF0ZSA9IDA7CiAgICAgICAgY29uc3QgYnVpbHRpbnMgPSB7CiAgICAgICAgICAgIHNyOiBjZmcuc3IsIGtzbXBzOiBjZmcua3NtcHMsIG5jaG5sczogY2ZnLm5jaG5scywKICAgICAgICAgICAgbmNobmxzX2k6IGNmZy5uY2hubHNJbiwgemVyb2RiZnM6IGNmZy56ZXJvZGJmcywKICAgICAgICB9OwogICAgICAgIGNvbnN0IGNvbXBpbGUgPSAobm9kZSkgPT4gewogICAgICAgICAgICBzd2l0Y2ggKG5vZGUudCkgewogICAgICAgICAgICAgICAgY2FzZSAibnVtIjogewogICAgICAgICAgICAgICAgICAgIGNvbnN0IHYgPSBub2RlLnZhbHVlOwogICAgICAgICAgICAgICAgICAgIHJldHVybiAoKSA9PiB2OwogICAgICAgICAgICAgICAgfQogICAgICAgICAgICAgICAgY2FzZSAicGZpZWxkIjogewogICAgICAgICAgICAgICAgICAgIGNvbnN0IGlkeCA9IG5vZGUuaW5kZXggLSAxOwogICAgICAgICAgICAgICAgICAgIHJldHVybiAoY3R4KSA9PiBpZHggPCBjdHgucGZpZWxkcy5sZW5ndGggPyBjdHgucGZpZWxkc1tpZHhdIDogMDsKICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIGNhc2UgInZhciI6IHsKICAgICAgICAgICAgICAgICAgICBpZiAobm9kZS5uYW1lIGluIGJ1aWx0aW5zICYmICFzbG90cy5oYXMobm9kZS5uYW1lKSkgewogICAgICAgICAgICAgICAgICAgICAgICBjb25zdCB2ID0gYnVpbHRpbnNbbm9kZS5uYW1lXTsKICAgICAgICAgICAgICAgICAgICAgICAgcmV0dXJuICgpID0+IHY7CiAgICAgICAgICAgICAgICAgICAgfQogICAgICAgICAgICAgICAgICAgIGNvbnN0IHNsb3QgPSBzbG90cy5nZXQobm9kZS5uYW1lKTsKICAgICAgICAgICAgICAgICAgICByZXR1cm4gKGN0eCkgPT4gY3R4LnZhbHNbc2xvdF07CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICBjYXNlICJiaW4iOiB7CiAgICAgICAgICAgICAgICAgICAgY29uc3QgbGYgPSBjb21waWxlKG5vZGUubGVmdCk7CiAgICAgICAgICAgICAgICAgICAgY29uc3QgcmYgPSBjb21waWxlKG5vZGUucmlnaHQpOwogICAgICAgICAgICAgICAgICAgIHN3aXRjaCAobm9kZS5vcCkgewogICAgICAgICAgICAgICAgICAgICAgICBjYXNlICIrIjogcmV0dXJuIChjdHgpID0+IGxmKGN0eCkgKyByZihjdHgpOwogICAgICAgICAgICAgICAgICAgICAgICBjYXNlICItIjogcmV0dXJuIChjdHgpID0+IGxmKGN0eCkgLSByZihjdHgpOwogICAgICAgICAgICAgICAgICAgICAgICBjYXNlICIqIjogcmV0dXJuIChjdHgpID0+IGxmKGN0eCkgKiByZihjdHgpOwogICAgICAgICAgICAgICAgICAgICAgICBkZWZhdWx0OiByZXR1cm4gKGN0eCkgPT4gbGYoY3R4KSAvIHJmKGN0eCk7IC8vIElFRUUgaW5mL25hbiwgY2xhbXBlZCBvbiB3cml0ZQogICAgICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIGNhc2UgIm9zY2lsIjogewogICAgICAgICAgICAgICAgICAgIGNvbnN0IGFtcGYgPSBjb21waWxlKG5vZGUuYW1wKTsKICAgICAgICAgICAgICAgICAgICBjb25zdCBmcmVxZiA9IGNvbXBpbGUobm9kZS5mcmVxKTsKICAgICAgICAgICAgICAgICAgICBjb25zdCBzbG90ID0gbnN0YXRlKys7CiAgICAgICAgICAgICAgICAgICAgY29uc3QgaW52U3IgPSAxIC8gY2ZnLnNyOwogICAgICAgICAgICAgICAgICAgIHJldHVybiAoY3R4KSA9PiB7CiAgICAgICAgICAgICAgICAgICAgICAgIGxldCBwaCA9IGN0eC5zdGF0ZVtzbG90XTsKICAgICAgICAgICAgICAgICAgICAgICAgY29uc3QgeSA9IGFtcGYoY3R4KSAqIE1hdGguc2luKFRXT19QSSAqIHBoKTsKICAgICAgICAgICAgICAgICAgICAgICAgcGggKz0gZnJlcWYoY3R4KSAqIGludlNyOwogICAgICAgICAgICAgICAgICAgICAgICBpZiAoIShwaCA+PSAwICYmIHBoIDwgMSkpCiAgICAgICAgICAgICAgICAgICAgICAgICAgICBwaCAtPSBNYXRoLmZsb29yKHBoKTsKICAgICAgICAgICAgICAgICAgICAgICAgY3R4LnN0YXRlW3Nsb3RdID0gcGg7CiAgICAgICAgICAgICAgICAgICAgICAgIHJldHVybiB5OwogICAgICAgICAgICAgICAgICAgIH07CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICBjYXNlICJsaW5lIjogewogICAgICAgICAgICAgICAgICAgIGNvbnN0IGFmID0gY29tcGlsZShub2RlLmEpOwogICAgICAgICAgICAgICAgICAgIGNvbnN0IGRmID0gY29tcGlsZShub2RlLmR1cik7CiAgICAgICAgICAgICAgICAgICAgY29uc3QgYmYgPSBjb21waWxlKG5vZGUuYik7CiAgICAgICAgICAgICAgICAgICAgY29uc3QgaW52U3IgPSAxIC8gY2ZnLnNyOwogICAgICAgICAgICAgICAgICAgIHJldHVybiAoY3R4KSA9PiB7CiAgICAgICAgICAgICAgICAgICAgICAgIGNvbnN0IGR1ciA9IGRmKGN0eCk7CiAgICAgICAgICAgICAgICAgICAgICAgIGNvbnN0IGIgPSBiZihjdHgpOwogICAgICAgICAgICAgICAgICAgICAgICBjb25zdCB0ID0gY3R4LmsgKiBpbnZTcjsKICAgICAgICAgICAgICAgICAgICAgICAgaWYgKGR1ciA8PSAwIHx8IHQgPj0gZHVyKQogICAgICAgICAgICAgICAgICAgICAgICAgICAgcmV0dXJuIGI7CiAgICAgICAgICAgICAgICAgICAgICAgIGNvbnN0IGEgPSBhZihjdHgpOwogICAgICAgICAgICAgICAgICAgICAgICByZXR1cm4gYSArIChiIC0gYSkgKiAodCAvIGR1cik7CiAgICAgICAgICAgICAgICAgICAgfTsKICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIGNhc2UgImluIjogewogICAgICAgICAgICAgICAgICAgIGNvbnN0IGNoID0gbm9kZS5jaGFubmVsOwogICAgICAgICAgICAgICAgICAgIHJldHVybiAoY3R4KSA9PiBjdHguc3BpbltjdHguaW5PZmYgKyBjaF07CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICBkZWZhdWx0OiB7CiAgICAgICAgICAgICAgICAgICAgbGV0IGlkeCA9IGNoYW5OYW1lcy5pbmRleE9mKG5vZGUubmFtZSk7CiAgICAgICAgICAgICAgICAgICAgaWYgKGlkeCA8IDApIHsKICAgICAgICAgICAgICAgICAgICAgICAgaWR4ID0gY2hhbk5hbWVzLmxlbmd0aDsKICAgICAgICAgICAgICAgICAgICAgICAgY2hhbk5hbWVzLnB1c2gobm9kZS5uYW1lKTsKICAgICAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICAgICAgcmV0dXJuIChjdHgpID0+IGN0eC5jaGFuc1tpZHhdOwogICAgICAgICAgICAgICAgfQogICAgICAgICAgICB9CiAgICAgICAgfTsKICAgICAgICBjb25zdCBhc3NpZ25zID0gW107CiAgICAgICAgbGV0IG91dHMgPSBbXTsKICAgICAgICBmb3IgKGNvbnN0IHN0bXQgb2YgaW5zdHIuYm9keSkgewogICAgICAgICAgICBpZiAoc3RtdC50ID09PSAiYXNzaWduIikgewogICAgICAgICAgICAgICAgY29uc3QgZm4gPSBjb21waWxlKHN0bXQuZXhwcik7CiAgICAgICAgICAgICAgICBpZiAoIXNsb3RzLmhhcyhzdG10Lm5hbWUpKQogICAgICAgICAgICAgICAgICAgIHNsb3RzLnNldChzdG10Lm5hbWUsIHNsb3RzLnNpemUpOwogICAgICAgICAgICAgICAgYXNzaWducy5wdXNoKFtzbG90cy5nZXQoc3RtdC5uYW1lKSwgZm5dKTsKICAgICAgICAgICAgfQogICAgICAgICAgICBlbHNlIHsKICAgICAgICAgICAgICAgIG91dHMgPSBzdG10LmV4cHJzLm1hcChjb21waWxlKTsKICAgICAgICAgICAgfQogICAgICAgIH0KICAgICAgICByZXR1cm4geyBudW1iZXI6IGluc3RyLm51bWJlciwgYXNzaWducywgb3V0cywgbnZhbHM6IHNsb3RzLnNpemUsIG5zdGF0ZSwgY2hhbk5hbWVzIH07CiAgICB9CiAgICBmdW5jdGlvbiBwYXJzZVNjb3JlKHRleHQpIHsKICAgICAgICBjb25zdCBldmVudHMgPSBbXTsKICAgICAgICBjb25zdCBkaWFncyA9IFtdOwogICAgICAgIGNvbnN0IGxpbmVzID0gdGV4dC5zcGxpdCgvXHI/XG4vKTsKICAgICAgICBmb3IgKGxldCBpID0gMDsgaSA8IGxpbmVzLmxlbmd0aDsgaSsrKSB7CiAgICAgICAgICAgIGNvbnN0IGxpbmVubyA9IGkgKyAxOwogICAgICAgICAgICBjb25zdCBsaW5lID0gbGluZXNbaV0uc3BsaXQoIjsiLCAxKVswXS50cmltKCk7CiAgICAgICAgICAgIGlmICghbGluZSkKICAgICAgICAgICAgICAgIGNvbnRpbnVlOwogICAgICAgICAgICBjb25zdCBmaWVsZHMgPSBsaW5lLnNwbGl0KC9ccysvKTsKICAgICAgICAgICAgY29uc3Qgb3AgPSBmaWVsZHNbMF07CiAgICAgICAgICAgIGlmIChvcCA9PT0gImkiKSB7CiAgICAgICAgICAgICAgICBpZiAoZmllbGRzLmxlbmd0aCA8IDQpIHsKICAgICAgICAgICAgICAgICAgICBkaWFncy5wdXNoKGRpYWcobGluZW5vLCAxLCAibm90ZSBsaW5lIG5lZWRzIElOU1RSIFNUQVJUIERVUiIpKTsKICAgICAgICAgICAgICAgICAgICBjb250aW51ZTsKICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIGNvbnN0IGluc3RyID0gTnVtYmVyKGZpZWxkc1sxXSk7CiAgICAgICAgICAgICAgICBpZiAoIS9eXGQrJC8udGVzdChmaWVsZHNbMV0pIHx8IGluc3RyIDwgMSkgewogICAgICAgICAgICAgICAgICAgIGRpYWdzLnB1c2goZGlhZyhsaW5lbm8sIDEsIGBpbnN0cnVtZW50IG11c3QgYmUgYSBwb3NpdGl2ZSBpbnRlZ2VyOiAnJHtmaWVsZHNbMV19J2ApKTsKICAgICAgICAgICAgICAgICAgICBjb250aW51ZTsKICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIGNvbnN0IG51bXMgPSBmaWVsZHMuc2xpY2UoMikubWFwKE51bWJlcik7CiAgICAgICAgICAgICAgICBpZiAobnVtcy5zb21lKChuKSA9PiBOdW1iZXIuaXNOYU4obikpKSB7CiAgICAgICAgICAgICAgICAgICAgZGlhZ3MucHVzaChkaWFnKGxpbmVubywgMSwgIm1hbGZvcm1lZCBudW1iZXIgaW4gbm90ZSBsaW5lIikpOwogICAgICAgICAgICAgICAgICAgIGNvbnRpbnVlOwogICAgICAgICAgICAgICAgfQogICAgICAgICAgICAgICAgY29uc3QgW3N0YXJ0VCwgZHVyLCAuLi5wZmllbGRzXSA9IG51bXM7CiAgICAgICAgICAgICAgICBpZiAoc3RhcnRUIDwgMCkgewogICAgICAgICAgICAgICAgICAgIGRpYWdzLnB1c2goZGlhZyhsaW5lbm8sIDEsICJzdGFydCBtdXN0IGJlID49IDAiKSk7CiAgICAgICAgICAgICAgICAgICAgY29udGludWU7CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICBpZiAoZHVyID09PSAwKSB7CiAgICAgICAgICAgICAgICAgICAgZGlhZ3MucHVzaChkaWFnKGxpbmVubywgMSwgImR1cmF0aW9uIG11c3QgYmUgbm9uemVybyAobmVnYXRpdmUgPSBoZWxkKSIpKTsKICAgICAgICAgICAgICAgICAgICBjb250aW51ZTsKICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIGV2ZW50cy5wdXNoKHsga2luZDogIm5vdGUiLCBpbnN0ciwgc3RhcnQ6IHN0YXJ0VCwgZHVyLCBwZmllbGRzLCBrZXk6IG51bGwgfSk7CiAgICAgICAgICAgIH0KICAgICAgICAgICAgZWxzZSBpZiAob3AgPT09ICJlIikgewogICAgICAgICAgICAgICAgaWYgKGZpZWxkcy5sZW5ndGggPiAyKSB7CiAgICAgICAgICAgICAgICAgICAgZGlhZ3MucHVzaChkaWFnKGxpbmVubywgMSwgImVuZCBsaW5lIHRha2VzIGF0IG1vc3Qgb25lIHRpbWUiKSk7CiAgICAgICAgICAgICAgICAgICAgY29udGludWU7CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICBsZXQgdGltZSA9IDA7CiAgICAgICAgICAgICAgICBpZiAoZmllbGRzLmxlbmd0aCA9PT0gMikgewogICAgICAgICAgICAgICAgICAgIHRpbWUgPSBOdW1iZXIoZmllbGRzWzFdKTsKICAgICAgICAgICAgICAgICAgICBpZiAoTnVtYmVyLmlzTmFOKHRpbWUpKSB7CiAgICAgICAgICAgICAgICAgICAgICAgIGRpYWdzLnB1c2goZGlhZyhsaW5lbm8sIDEsICJtYWxmb3JtZWQgZW5kIHRpbWUiKSk7CiAgICAgICAgICAgICAgICAgICAgICAgIGNvbnRpbnVlOwogICAgICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgICAgICBpZiAodGltZSA8IDApIHsKICAgICAgICAgICAgICAgICAgICAgICAgZGlhZ3MucHVzaChkaWFnKGxpbmVubywgMSwgImVuZCB0aW1lIG11c3QgYmUgPj0gMCIpKTsKICAgICAgICAgICAgICAgICAgICAgICAgY29udGludWU7CiAgICAgICAgICAgICAgICAgICAgfQogICAgICAgICAgICAgICAgfQogICAgICAgICAgICAgICAgZXZlbnRzLnB1c2goeyBraW5kOiAiZW5kIiwgaW5zdHI6IDAsIHN0YXJ0OiB0aW1lLCBkdXI6IDAsIHBmaWVsZHM6IFtdLCBrZXk6IG51bGwgfSk7CiAgICAgICAgICAgIH0KICAgICAgICAgICAgZWxzZSB7CiAgICAgICAgICAgICAgICBkaWFncy5wdXNoKGRpYWcobGluZW5vLCAxLCBgdW5rbm93biBzY29yZSBzdGF0ZW1lbnQgJyR7b3B9J2ApKTsKICAgICAgICAgICAgfQogICAgICAgIH0KICAgICAgICByZXR1cm4geyBldmVudHMsIGRpYWdub3N0aWNzOiBkaWFncyB9OwogICAgfQogICAgZnVuY3Rpb24gbWlkaVRvRXZlbnQoc3RhdHVzLCBkMSwgZDIpIHsKICAgICAgICBjb25zdCBraW5kID0gc3RhdHVzICYgMHhmMDsKICAgICAgICBjb25zdCBjaGFubmVsID0gc3RhdHVzICYgMHgwZjsKICAgICAgICBpZiAoa2luZCA9PT0gMHg5MCAmJiBkMiA+IDApIHsKICAgICAgICAgICAgY29uc3QgZnJlcSA9IDQ0MCAqIE1hdGgucG93KDIsIChkMSAtIDY5KSAvIDEyKTsKICAgICAgICAgICAgcmV0dXJuIHsga2luZDogIm5vdGUiLCBpbnN0cjogY2hhbm5lbCArIDEsIHN0YXJ0OiAwLCBkdXI6IC0xLAogICAgICAgICAgICAgICAgcGZpZWxkczogW2QyIC8gMTI3LCBmcmVxXSwga2V5OiBkMSB9OwogICAgICAgIH0KICAgICAgICBpZiAoa2luZCA9PT0gMHg4MCB8fCAoa2luZCA9PT0gMHg5MCAmJiBkMiA9PT0gMCkpIHsKICAgICAgICAgICAgcmV0dXJuIHsga2luZDogInJlbGVhc2UiLCBpbnN0cjogY2hhbm5lbCArIDEsIHN0YXJ0OiAwLCBkdXI6IDAsIHBmaWVsZHM6IFtdLCBrZXk6IGQxIH07CiAgICAgICAgfQogICAgICAgIHJldHVybiBudWxsOwogICAgfQogICAgY2xhc3MgRW5naW5lIHsKICAgICAgICBjb25zdHJ1Y3Rvcihjb25maWcpIHsKICAgICAgICAgICAgdGhpcy5jb25zb2xlID0gbnVsbDsKICAgICAgICAgICAgdGhpcy5ibG9ja0luZGV4ID0gMDsKICAgICAgICAgICAgdGhpcy5maW5pc2hlZCA9IGZhbHNlOwogICAgICAgICAgICB0aGlzLmNsYW1wZWRTYW1wbGVzID0gMDsKICAgICAgICAgICAgdGhpcy5pbnN0cnVtZW50cyA9IG5ldyBNYXAoKTsKICAgICAgICAgICAgdGhpcy5idXMgPSBuZXcgTWFwKCk7CiAgICAgICAgICAgIHRoaXMucGVuZGluZyA9IFtdOwogICAgICAgICAgICB0aGlzLmFjdGl2ZSA9IFtdOwogICAgICAgICAgICB0aGlzLnNlcSA9IDA7CiAgICAgICAgICAgIHRoaXMuZW5kUmVhY2hlZCA9IGZhbHNlOwogICAgICAgICAgICB2YWxpZGF0ZUNvbmZpZyhjb25maWcpOwogICAgICAgICAgICB0aGlzLmNvbmZpZyA9IGNvbmZpZzsKICAgICAgICAgICAgdGhpcy5zcGluID0gbmV3IEZsb2F0NjRBcnJheShjb25maWcua3NtcHMgKiBjb25maWcubmNobmxzSW4pOwogICAgICAgICAgICB0aGlzLnNwb3V0ID0gbmV3IEZsb2F0NjRBcnJheShjb25maWcua3NtcHMgKiBjb25maWcubmNobmxzKTsKICAgICAgICB9CiAgICAgICAgc2F5KHRleHQpIHsKICAgICAgICAgICAgaWYgKHRoaXMuY29uc29sZSkKICAgICAgICAgICAgICAgIHRoaXMuY29uc29sZSh0ZXh0KTsKICAgICAgICB9CiAgICAgICAgZ2V0IHRpbWVTZWNvbmRzKCkgewogICAgICAgICAgICByZXR1cm4gdGhpcy5ibG9ja0luZGV4ICogdGhpcy5jb25maWcua3NtcHMgLyB0aGlzLmNvbmZpZy5zcjsKICAgICAgICB9CiAgICAgICAgY29tcGlsZU9yYyhzb3VyY2UpIHsKICAgICAgICAgICAgY29uc3QgeyBpbnN0cnVtZW50cywgZGlhZ25vc3RpY3MgfSA9IHBhcnNlT3JjaGVzdHJhKHNvdXJjZSk7CiAgICAgICAgICAgIGNvbnN0IGRpYWdzID0gWy4uLmRpYWdub3N0aWNzXTsKICAgICAgICAgICAgaWYgKCFkaWFncy5sZW5ndGgpIHsKICAgICAgICAgICAgICAgIGZvciAoY29uc3QgaW5zdHIgb2YgaW5zdHJ1bWVudHMpIHsKICAgICAgICAgICAgICAgICAgICBkaWFncy5wdXNoKC4uLmNoZWNrSW5zdHJ1bWVudChpbnN0ciwgdGhpcy5jb25maWcubmNobmxzLCB0aGlzLmNvbmZpZy5uY2hubHNJbikpOwogICAgICAgICAgICAgICAgfQogICAgICAgICAgICB9CiAgICAgICAgICAgIGlmIChkaWFncy5sZW5ndGgpIHsKICAgICAgICAgICAgICAgIGZvciAoY29uc3QgZCBvZiBkaWFncykKICAgICAgICAgICAgICAgICAgICB0aGlzLnNheShgZXJyb3I6IGxpbmUgJHtkLmxpbmV9OiR7ZC5jb2x1bW59OiAke2QubWVzc2FnZX1gKTsKICAgICAgICAgICAgICAgIHJldHVybiB7IG9rOiBmYWxzZSwgZGlhZ25vc3RpY3M6IGRpYWdzLCBpbnN0cnVtZW50czogW10gfTsKICAgICAgICAgICAgfQogICAgICAgICAgICBjb25zdCBudW1iZXJzID0gW107CiAgICAgICAgICAgIGZvciAoY29uc3QgaW5zdHIgb2YgaW5zdHJ1bWVudHMpIHsKICAgICAgICAgICAgICAgIHRoaXMuaW5zdHJ1bWVudHMuc2V0KGluc3RyLm51bWJlciwgY29tcGlsZUluc3RydW1lbnQoaW5zdHIsIHRoaXMuY29uZmlnKSk7CiAgICAgICAgICAgICAgICBudW1iZXJzLnB1c2goaW5zdHIubnVtYmVyKTsKICAgICAgICAgICAgfQogICAgICAgICAgICBudW1iZXJzLnNvcnQoKGEsIGIpID0+IGEgLSBiKTsKICAgICAgICAgICAgdGhpcy5zYXkobnVtYmVycy5sZW5ndGggPyBgY29tcGlsZWQgaW5zdHIgJHtudW1iZXJzLmpvaW4oIiwgIil9YCA6ICJjb21waWxlZCBlbXB0eSBvcmNoZXN0cmEiKTsKICAgICAgICAgICAgcmV0dXJuIHsgb2s6IHRydWUsIGRpYWdub3N0aWNzOiBbXSwgaW5zdHJ1bWVudHM6IG51bWJlcnMgfTsKICAgICAgICB9CiAgICAgICAgcmVhZFNjb3JlKHRleHQpIHsKICAgICAgICAgICAgY29uc3QgeyBldmVudHMsIGRpYWdub3N0aWNzIH0gPSBwYXJzZVNjb3JlKHRleHQpOwogICAgICAgICAgICBpZiAoZGlhZ25vc3RpY3MubGVuZ3RoKQogICAgICAgICAgICAgICAgcmV0dXJuIGRpYWdub3N0aWNzOwogICAgICAgICAgICBmb3IgKGNvbnN0IGV2IG9mIGV2ZW50cykKICAgICAgICAgICAgICAgIHRoaXMuc2VuZEV2ZW50KGV2KTsKICAgICAgICAgICAgcmV0dXJuIFtdOwogICAgICAgIH0KICAgICAgICBzZW5kRXZlbnQoZXYpIHsKICAgICAgICAgICAgY29uc3QgY2ZnID0gdGhpcy5jb25maWc7CiAgICAgICAgICAgIGNvbnN0IHN0YXJ0QWJzID0gdGhpcy50aW1lU2Vjb25kcyArIE1hdGgubWF4KGV2LnN0YXJ0LCAwKTsKICAgICAgICAgICAgY29uc3QgZnJhbWUgPSBNYXRoLmZsb29yKHN0YXJ0QWJzICogY2ZnLnNyICsgRlJBTUVfRVBTKTsKICAgICAgICAgICAgY29uc3QgYmxvY2sgPSBNYXRoLm1heChNYXRoLmZsb29yKGZyYW1lIC8gY2ZnLmtzbXBzKSwgdGhpcy5ibG9ja0luZGV4KTsKICAgICAgICAgICAgdGhpcy5zZXEgKz0gMTsKICAgICAgICAgICAgY29uc3QgcSA9IHsgYmxvY2ssIHN0YXJ0OiBzdGFydEFicywgc2VxOiB0aGlzLnNlcSwgZXZlbnQ6IGV2IH07CiAgICAgICAgICAgIC8vIGtlZXAgcGVuZGluZyBzb3J0ZWQgYnkgKGJsb2NrLCBzdGFydCwgc2VxKQogICAgICAgICAgICBsZXQgbG8gPSAwOwogICAgICAgICAgICBsZXQgaGkgPSB0aGlzLnBlbmRpbmcubGVuZ3RoOwogICAgICAgICAgICB3aGlsZSAobG8gPCBoaSkgewogICAgICAgICAgICAgICAgY29uc3QgbWlkID0gKGxvICsgaGkpID4+IDE7CiAgICAgICAgICAgICAgICBjb25zdCBwID0gdGhpcy5wZW5kaW5nW21pZF07CiAgICAgICAgICAgICAgICBpZiAocC5ibG9jayA8IHEuYmxvY2sgfHwgKHAuYmxvY2sgPT09IHEuYmxvY2sgJiYKICAgICAgICAgICAgICAgICAgICAocC5zdGFydCA8IHEuc3RhcnQgfHwgKHAuc3RhcnQgPT09IHEuc3RhcnQgJiYgcC5zZXEgPCBxLnNlcSkpKSkgewogICAgICAgICAgICAgICAgICAgIGxvID0gbWlkICsgMTsKICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIGVsc2UgewogICAgICAgICAgICAgICAgICAgIGhpID0gbWlkOwogICAgICAgICAgICAgICAgfQogICAgICAgICAgICB9CiAgICAgICAgICAgIHRoaXMucGVuZGluZy5zcGxpY2UobG8sIDAsIHEpOwogICAgICAgIH0KICAgICAgICBzZXRDaGFubmVsKG5hbWUsIHZhbHVlKSB7CiAgICAgICAgICAgIGlmICghbmFtZSkKICAgICAgICAgICAgICAgIHRocm93IG5ldyBFcnJvcigiY2hhbm5lbCBuYW1lIG11c3QgYmUgbm9uLWVtcHR5Iik7CiAgICAgICAgICAgIHRoaXMuYnVzLnNldChuYW1lLCB2YWx1ZSk7CiAgICAgICAgfQogICAgICAgIGdldENoYW5uZWwobmFtZSkgewogICAgICAgICAgICBpZiAoIW5hbWUpCiAgICAgICAgICAgICAgICB0aHJvdyBuZXcgRXJyb3IoImNoYW5uZWwgbmFtZSBtdXN0IGJlIG5vbi1lbXB0eSIpOwogICAgICAgICAgICByZXR1cm4gdGhpcy5idXMuZ2V0KG5hbWUpID8/IDA7CiAgICAgICAgfQogICAgICAgIHBlcmZvcm1CbG9jaygpIHsKICAgICAgICAgICAgaWYgKHRoaXMuZmluaXNoZWQpCiAgICAgICAgICAgICAgICByZXR1cm4gMTsKICAgICAgICAgICAgdGhpcy5hY3RpdmF0ZUR1ZSgpOwogICAgICAgICAgICB0aGlzLnNwb3V0LmZpbGwoMCk7CiAgICAgICAgICAgIGZvciAoY29uc3Qgbm90ZSBvZiB0aGlzLmFjdGl2ZSkKICAgICAgICAgICAgICAgIHRoaXMucmVuZGVyTm90ZShub3RlKTsKICAgICAgICAgICAgdGhpcy5hY3RpdmUgPSB0aGlzLmFjdGl2ZS5maWx0ZXIoKG4pID0+IG4uYmxvY2tzTGVmdCA9PT0gbnVsbCB8fCBuLmJsb2Nrc0xlZnQgPiAwKTsKICAgICAgICAgICAgdGhpcy5ibG9ja0luZGV4ICs9IDE7CiAgICAgICAgICAgIGlmICh0aGlzLmVuZFJlYWNoZWQpIHsKICAgICAgICAgICAgICAgIHRoaXMuZmluaXNoZWQgPSB0cnVlOwogICAgICAgICAgICAgICAgcmV0dXJuIDE7CiAgICAgICAgICAgIH0KICAgICAgICAgICAgcmV0dXJuIDA7CiAgICAgICAgfQogICAgICAgIGFjdGl2YXRlRHVlKCkgewogICAgICAgICAgICBsZXQgdGFrZW4gPSAwOwogICAgICAgICAgICBmb3IgKGNvbnN0IHEgb2YgdGhpcy5wZW5kaW5nKSB7CiAgICAgICAgICAgICAgICBpZiAocS5ibG9jayA+IHRoaXMuYmxvY2tJbmRleCkKICAgICAgICAgICAgICAgICAgICBicmVhazsKICAgICAgICAgICAgICAgIHRha2VuICs9IDE7CiAgICAgICAgICAgICAgICBjb25zdCBldiA9IHEuZXZlbnQ7CiAgICAgICAgICAgICAgICBpZiAoZXYua2luZCA9PT0gImVuZCIpCiAgICAgICAgICAgICAgICAgICAgdGhpcy5lbmRSZWFjaGVkID0gdHJ1ZTsKICAgICAgICAgICAgICAgIGVsc2UgaWYgKGV2LmtpbmQgPT09ICJyZWxlYXNlIikKICAgICAgICAgICAgICAgICAgICB0aGlzLnJlbGVhc2UoZXYuaW5zdHIsIGV2LmtleSk7CiAgICAgICAgICAgICAgICBlbHNlCiAgICAgICAgICAgICAgICAgICAgdGhpcy5zdGFydE5vdGUocSk7CiAgICAgICAgICAgIH0KICAgICAgICAgICAgaWYgKHRha2VuKQogICAgICAgICAgICAgICAgdGhpcy5wZW5kaW5nLnNwbGljZSgwLCB0YWtlbik7CiAgICAgICAgfQogICAgICAgIHN0YXJ0Tm90ZShxKSB7CiAgICAgICAgICAgIGNvbnN0IGV2ID0gcS5ldmVudDsKICAgICAgICAgICAgY29uc3QgY29tcGlsZWQgPSB0aGlzLmluc3RydW1lbnRzLmdldChldi5pbnN0cik7CiAgICAgICAgICAgIGlmICghY29tcGlsZWQpIHsKICAgICAgICAgICAgICAgIHRoaXMuc2F5KGB3YXJuaW5nOiBpbnN0ciAke2V2Lmluc3RyfSBub3QgZGVmaW5lZDsgbm90ZSBkcm9wcGVkYCk7CiAgICAgICAgICAgICAgICByZXR1cm47CiAgICAgICAgICAgIH0KICAgICAgICAgICAgY29uc3QgY2ZnID0gdGhpcy5jb25maWc7CiAgICAgICAgICAgIGNvbnN0IGJsb2NrcyA9IGV2LmR1ciA8IDAgPyBudWxsCiAgICAgICAgICAgICAgICA6IE1hdGgubWF4KDEsIE1hdGguY2VpbChldi5kdXIgKiBjZmcuc3IgLyBjZmcua3NtcHMgLSBGUkFNRV9FUFMpKTsKICAgICAgICAgICAgY29uc3QgY3R4ID0gewogICAgICAgICAgICAgICAgdmFsczogbmV3IEZsb2F0NjRBcnJheShjb21waWxlZC5udmFscyksCiAgICAgICAgICAgICAgICBzdGF0ZTogbmV3IEZsb2F0NjRBcnJheShjb21waWxlZC5uc3RhdGUpLAogICAgICAgICAgICAgICAgY2hhbnM6IG5ldyBGbG9hdDY0QXJyYXkoY29tcGlsZWQuY2hhbk5hbWVzLmxlbmd0aCksCiAgICAgICAgICAgICAgICBwZmllbGRzOiBbZXYuaW5zdHIsIHEuc3RhcnQsIGV2LmR1ciwgLi4uZXYucGZpZWxkc10sCiAgICAgICAgICAgICAgICBzcGluOiB0aGlzLnNwaW4sCiAgICAgICAgICAgICAgICBpbk9mZjogMCwKICAgICAgICAgICAgICAgIGs6IDAsCiAgICAgICAgICAgIH07CiAgICAgICAgICAgIHRoaXMuYWN0aXZlLnB1c2goewogICAgICAgICAgICAgICAgaW5zdHJOdW06IGV2Lmluc3RyLCBjb21waWxlZCwgY3R4LCBmcmFtZXNEb25lOiAwLAogICAgICAgICAgICAgICAgYmxvY2tzTGVmdDogYmxvY2tzLCBoZWxkOiBibG9ja3MgPT09IG51bGwsIGtleTogZXYua2V5LAogICAgICAgICAgICB9KTsKICAgICAgICB9CiAgICAgICAgcmVsZWFzZShpbnN0ciwga2V5KSB7CiAgICAgICAgICAgIC8vIHJlbGVhc2VkIG5vdGVzIGRvIG5vdCByZW5kZXIgdGhlIGJsb2NrIHRoZSByZWxlYXNlIGxhbmRzIGluCiAgICAgICAgICAgIGZvciAobGV0IGkgPSAwOyBpIDwgdGhpcy5hY3RpdmUubGVuZ3RoOyBpKyspIHsKICAgICAgICAgICAgICAgIGNvbnN0IG4gPSB0aGlzLmFjdGl2ZVtpXTsKICAgICAgICAgICAgICAgIGlmIChuLmhlbGQgJiYgbi5pbnN0ck51bSA9PT0gaW5zdHIgJiYgbi5rZXkgPT09IGtleSkgewogICAgICAgICAgICAgICAgICAgIHRoaXMuYWN0aXZlLnNwbGljZShpLCAxKTsKICAgICAgICAgICAgICAgICAgICByZXR1cm47CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgIH0KICAgICAgICB9CiAgICAgICAgcmVuZGVyTm90ZShub3RlKSB7CiAgICAgICAgICAgIGNvbnN0IHsgY29tcGlsZWQsIGN0eCB9ID0gbm90ZTsKICAgICAgICAgICAgZm9yIChsZXQgaSA9IDA7IGkgPCBjb21waWxlZC5jaGFuTmFtZXMubGVuZ3RoOyBpKyspIHsKICAgICAgICAgICAgICAgIGN0eC5jaGFuc1tpXSA9IHRoaXMuYnVzLmdldChjb21waWxlZC5jaGFuTmFtZXNbaV0pID8/IDA7CiAgICAgICAgICAgIH0KICAgICAgICAgICAgY29uc3QgY2ZnID0gdGhpcy5jb25maWc7CiAgICAgICAgICAgIGNvbnN0IHNwb3V0ID0gdGhpcy5zcG91dDsKICAgICAgICAgICAgY29uc3QgazAgPSBub3RlLmZyYW1lc0RvbmU7CiAgICAgICAgICAgIGZvciAobGV0IGkgPSAwOyBpIDwgY2ZnLmtzbXBzOyBpKyspIHsKICAgICAgICAgICAgICAgIGN0eC5rID0gazAgKyBpOwogICAgICAgICAgICAgICAgY3R4LmluT2ZmID0gaSAqIGNmZy5uY2hubHNJbjsKICAgICAgICAgICAgICAgIGZvciAoY29uc3QgW3Nsb3QsIGZuXSBvZiBjb21waWxlZC5hc3NpZ25zKQogICAgICAgICAgICAgICAgICAgIGN0eC52YWxzW3Nsb3RdID0gZm4oY3R4KTsKICAgICAgICAgICAgICAgIGNvbnN0IGJhc2UgPSBpICogY2ZnLm5jaG5sczsKICAgICAgICAgICAgICAgIGZvciAobGV0IGNoID0gMDsgY2ggPCBjb21waWxlZC5vdXRzLmxlbmd0aDsgY2grKykgewogICAgICAgICAgICAgICAgICAgIGNvbnN0IHYgPSBjb21waWxlZC5vdXRzW2NoXShjdHgpOwogICAgICAgICAgICAgICAgICAgIGlmIChOdW1iZXIuaXNGaW5pdGUodikpCiAgICAgICAgICAgICAgICAgICAgICAgIHNwb3V0W2Jhc2UgKyBjaF0gKz0gdjsKICAgICAgICAgICAgICAgICAgICBlbHNlCiAgICAgICAgICAgICAgICAgICAgICAgIHRoaXMuY2xhbXBlZFNhbXBsZXMgKz0gMTsKICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgfQogICAgICAgICAgICBub3RlLmZyYW1lc0RvbmUgKz0gY2ZnLmtzbXBzOwogICAgICAgICAgICBpZiAobm90ZS5ibG9ja3NMZWZ0ICE9PSBudWxsKQogICAgICAgICAgICAgICAgbm90ZS5ibG9ja3NMZWZ0IC09IDE7CiAgICAgICAgfQogICAgICAgIHJlc2V0KCkgewogICAgICAgICAgICB0aGlzLmluc3RydW1lbnRzLmNsZWFyKCk7CiAgICAgICAgICAgIHRoaXMuYnVzLmNsZWFyKCk7CiAgICAgICAgICAgIHRoaXMucGVuZGluZyA9IFtdOwogICAgICAgICAgICB0aGlzLmFjdGl2ZSA9IFtdOwogICAgICAgICAgICB0aGlzLnNwaW4uZmlsbCgwKTsKICAgICAgICAgICAgdGhpcy5zcG91dC5maWxsKDApOwogICAgICAgICAgICB0aGlzLmJsb2NrSW5kZXggPSAwOwogICAgICAgICAgICB0aGlzLmZpbmlzaGVkID0gZmFsc2U7CiAgICAgICAgICAgIHRoaXMuZW5kUmVhY2hlZCA9IGZhbHNlOwogICAgICAgICAgICB0aGlzLmNsYW1wZWRTYW1wbGVzID0gMDsKICAgICAgICAgICAgdGhpcy5zZXEgPSAwOwogICAgICAgIH0KICAgIH0KICAgIC8vIC0tLS0gc2FuZGJveCBmaWxlc3lzdGVtIC0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tCiAgICBjbGFzcyBWZnMgewogICAgICAgIGNvbnN0cnVjdG9yKCkgewogICAgICAgICAgICB0aGlzLmZpbGVzID0gbmV3IE1hcCgpOwogICAgICAgIH0KICAgICAgICBub3JtYWxpemUocGF0aCkgewogICAgICAgICAgICBpZiAoIXBhdGggfHwgcGF0aC5pbmNsdWRlcygiXFwiKSB8fCBwYXRoLnN0YXJ0c1dpdGgoIi8iKSkgewogICAgICAgICAgICAgICAgdGhyb3cgbmV3IEVycm9yKGBpbnZhbGlkIHBhdGg6ICR7cGF0aH1gKTsKICAgICAgICAgICAgfQogICAgICAgICAgICBjb25zdCBwYXJ0cyA9IHBhdGguc3BsaXQoIi8iKS5maWx0ZXIoKHApID0+IHAgIT09ICIiICYmIHAgIT09ICIuIik7CiAgICAgICAgICAgIGlmICghcGFydHMubGVuZ3RoIHx8IHBhcnRzLmluY2x1ZGVzKCIuLiIpKQogICAgICAgICAgICAgICAgdGhyb3cgbmV3IEVycm9yKGBpbnZhbGlkIHBhdGg6ICR7cGF0aH1gKTsKICAgICAgICAgICAgcmV0dXJuIHBhcnRzLmpvaW4oIi8iKTsKICAgICAgICB9CiAgICAgICAgd3JpdGUocGF0aCwgZGF0YSkgewogICAgICAgICAgICB0aGlzLmZpbGVzLnNldCh0aGlzLm5vcm1hbGl6ZShwYXRoKSwgZGF0YS5zbGljZSgpKTsKICAgICAgICB9CiAgICAgICAgbGlzdChwcmVmaXgpIHsKICAgICAgICAgICAgY29uc3Qgb3V0ID0gW107CiAgICAgICAgICAgIGZvciAoY29uc3QgW3BhdGgsIGRhdGFdIG9mIHRoaXMuZmlsZXMpIHsKICAgICAgICAgICAgICAgIGlmIChwYXRoLnN0YXJ0c1dpdGgocHJlZml4KSkKICAgICAgICAgICAgICAgICAgICBvdXQucHVzaChbcGF0aCwgZGF0YS5sZW5ndGhdKTsKICAgICAgICAgICAgfQogICAgICAgICAgICBvdXQuc29ydCgoYSwgYikgPT4gKGFbMF0gPCBiWzBdID8gLTEgOiBhWzBdID4gYlswXSA/IDEgOiAwKSk7CiAgICAgICAgICAgIHJldHVybiBvdXQ7CiAgICAgICAgfQogICAgfQogICAgLy8gLS0tLSBwcm9jZXNzb3IgY29yZSAtLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0tLS0KICAgIGNvbnN0IElOQk9YX0NBUEFDSVRZID0gMTAyNDsKICAgIC8qKgogICAgICogUmVuZGVyLWNvbnRleHQgc3RhdGUgbWFjaGluZTogb3ducyB0aGUgZW5naW5lIGFuZCBhZGFwdHMgaXRzIGtzbXBzCiAgICAgKiBibG9jayB0byBhbnkgaG9zdCBidWZmZXIgdmlhIHRoZSBjbnQgYXV0b21hdG9uLiBNZXNzYWdlcyBhcmUgYXBwbGllZAogICAgICogb25seSBhdCB0aGUgc3RhcnQgb2YgYSBwcm9jZXNzIGNhbGwuIE9uY2UgdGhlIGVuZ2luZSBmaW5pc2hlcywgb3V0cHV0CiAgICAgKiBmcmFtZXMgYXJlIHplcm9zIGFuZCBjbnQgZnJlZXplcyBzbyBidWZmZXIgaW5kaWNlcyBzdGF5IGJvdW5kZWQuCiAgICAgKi8KICAgIGNsYXNzIFByb2Nlc3NvckNvcmUgewogICAgICAgIGNvbnN0cnVjdG9yKGNvbmZpZywgZW1pdCkgewogICAgICAgICAgICB0aGlzLnZmcyA9IG5ldyBWZnMoKTsKICAgICAgICAgICAgdGhpcy5zdGF0dXMgPSAwOwogICAgICAgICAgICB0aGlzLnJ1bm5pbmcgPSBmYWxzZTsKICAgICAgICAgICAgdGhpcy5kcm9wcGVkTWVzc2FnZXMgPSAwOwogICAgICAgICAgICB0aGlzLmluYm94ID0gW107CiAgICAgICAgICAgIHRoaXMuZmluaXNoZWRFbWl0dGVkID0gZmFsc2U7CiAgICAgICAgICAgIHRoaXMuZW5naW5lID0gbmV3IEVuZ2luZShjb25maWcpOwogICAgICAgICAgICB0aGlzLmVtaXQgPSBlbWl0OwogICAgICAgICAgICB0aGlzLmVuZ2luZS5jb25zb2xlID0gKHRleHQpID0+IHRoaXMuZW1pdCh7IHR5cGU6ICJjb25zb2xlIiwgcGF5bG9hZDogeyB0ZXh0IH0gfSk7CiAgICAgICAgICAgIHRoaXMuY250ID0gY29uZmlnLmtzbXBzOyAvLyBmaXJzdCBydW5uaW5nIHByb2Nlc3MgY2FsbCBwZXJmb3JtcyBhdCBvbmNlCiAgICAgICAgfQogICAgICAgIHBvc3QobXNnKSB7CiAgICAgICAgICAgIGlmICh0aGlzLmluYm94Lmxlbmd0aCA+PSBJTkJPWF9DQVBBQ0lUWSkgewogICAgICAgICAgICAgICAgdGhpcy5kcm9wcGVkTWVzc2FnZXMgKz0gMTsKICAgICAgICAgICAgICAgIHJldHVybiBmYWxzZTsKICAgICAgICAgICAgfQogICAgICAgICAgICB0aGlzLmluYm94LnB1c2gobXNnKTsKICAgICAgICAgICAgcmV0dXJuIHRydWU7CiAgICAgICAgfQogICAgICAgIGFwcGx5TWVzc2FnZXMoKSB7CiAgICAgICAgICAgIGNvbnN0IGVuZ2luZSA9IHRoaXMuZW5naW5lOwogICAgICAgICAgICBmb3IgKGNvbnN0IG1zZyBvZiB0aGlzLmluYm94LnNwbGljZSgwKSkgewogICAgICAgICAgICAgICAgdHJ5IHsKICAgICAgICAgICAgICAgICAgICBjb25zdCBwID0gbXNnLnBheWxvYWQgPz8ge307CiAgICAgICAgICAgICAgICAgICAgc3dpdGNoIChtc2cudHlwZSkgewogICAgICAgICAgICAgICAgICAgICAgICBjYXNlICJjb21waWxlLW9yYyI6IHsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIGNvbnN0IHJlc3VsdCA9IGVuZ2luZS5jb21waWxlT3JjKHAuc291cmNlKTsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIHRoaXMuZW1pdCh7CiAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgdHlwZTogImNvbXBpbGUtcmVzdWx0IiwKICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICBwYXlsb2FkOiB7CiAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgIG9rOiByZXN1bHQub2ssCiAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgIGRpYWdub3N0aWNzOiByZXN1bHQuZGlhZ25vc3RpY3MubWFwKChkKSA9PiBbZC5saW5lLCBkLmNvbHVtbiwgZC5tZXNzYWdlXSksCiAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgfSwKICAgICAgICAgICAgICAgICAgICAgICAgICAgIH0pOwogICAgICAgICAgICAgICAgICAgICAgICAgICAgYnJlYWs7CiAgICAgICAgICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgICAgICAgICAgY2FzZSAicmVhZC1zY29yZSI6IHsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIGNvbnN0IGRpYWdzID0gZW5naW5lLnJlYWRTY29yZShwLnRleHQpOwogICAgICAgICAgICAgICAgICAgICAgICAgICAgZm9yIChjb25zdCBkIG9mIGRpYWdzKSB7CiAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgdGhpcy5lbWl0KHsgdHlwZTogImNvbnNvbGUiLAogICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICBwYXlsb2FkOiB7IHRleHQ6IGBlcnJvcjogbGluZSAke2QubGluZX06JHtkLmNvbHVtbn06ICR7ZC5tZXNzYWdlfWAgfSB9KTsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgICAgICAgICAgICAgIGJyZWFrOwogICAgICAgICAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICAgICAgICAgIGNhc2UgImV2ZW50IjoKICAgICAgICAgICAgICAgICAgICAgICAgICAgIGVuZ2luZS5zZW5kRXZlbnQocC5ldmVudCk7CiAgICAgICAgICAgICAgICAgICAgICAgICAgICBicmVhazsKICAgICAgICAgICAgICAgICAgICAgICAgY2FzZSAic2V0LWNoYW5uZWwiOgogICAgICAgICAgICAgICAgICAgICAgICAgICAgZW5naW5lLnNldENoYW5uZWwocC5uYW1lLCBwLnZhbHVlKTsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIGJyZWFrOwogICAgICAgICAgICAgICAgICAgICAgICBjYXNlICJnZXQtY2hhbm5lbCI6CiAgICAgICAgICAgICAgICAgICAgICAgICAgICB0aGlzLmVtaXQoeyB0eXBlOiAiY2hhbm5lbC12YWx1ZSIsCiAgICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgcGF5bG9hZDogeyByZXF1ZXN0X2lkOiBwLnJlcXVlc3RfaWQsIHZhbHVlOiBlbmdpbmUuZ2V0Q2hhbm5lbChwLm5hbWUpIH0gfSk7CiAgICAgICAgICAgICAgICAgICAgICAgICAgICBicmVhazsKICAgICAgICAgICAgICAgICAgICAgICAgY2FzZSAibWlkaSI6IHsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIGNvbnN0IGV2ID0gbWlkaVRvRXZlbnQocC5zdGF0dXMsIHAuZDEsIHAuZDIpOwogICAgICAgICAgICAgICAgICAgICAgICAgICAgaWYgKGV2KQogICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgIGVuZ2luZS5zZW5kRXZlbnQoZXYpOwogICAgICAgICAgICAgICAgICAgICAgICAgICAgYnJlYWs7CiAgICAgICAgICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgICAgICAgICAgY2FzZSAid3JpdGUtZmlsZSI6CiAgICAgICAgICAgICAgICAgICAgICAgICAgICB0aGlzLnZmcy53cml0ZShwLnBhdGgsIFVpbnQ4QXJyYXkuZnJvbShwLmRhdGEpKTsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIGJyZWFrOwogICAgICAgICAgICAgICAgICAgICAgICBjYXNlICJsaXN0LWZpbGVzIjoKICAgICAgICAgICAgICAgICAgICAgICAgICAgIHRoaXMuZW1pdCh7IHR5cGU6ICJmaWxlLWxpc3QiLAogICAgICAgICAgICAgICAgICAgICAgICAgICAgICAgIHBheWxvYWQ6IHsgcmVxdWVzdF9pZDogcC5yZXF1ZXN0X2lkLCBlbnRyaWVzOiB0aGlzLnZmcy5saXN0KHAucHJlZml4KSB9IH0pOwogICAgICAgICAgICAgICAgICAgICAgICAgICAgYnJlYWs7CiAgICAgICAgICAgICAgICAgICAgICAgIGNhc2UgInN0YXJ0IjoKICAgICAgICAgICAgICAgICAgICAgICAgICAgIHRoaXMucnVubmluZyA9IHRydWU7CiAgICAgICAgICAgICAgICAgICAgICAgICAgICBicmVhazsKICAgICAgICAgICAgICAgICAgICAgICAgY2FzZSAic3RvcCI6CiAgICAgICAgICAgICAgICAgICAgICAgICAgICB0aGlzLnJ1bm5pbmcgPSBmYWxzZTsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIGJyZWFrOwogICAgICAgICAgICAgICAgICAgICAgICBjYXNlICJyZXNldCI6CiAgICAgICAgICAgICAgICAgICAgICAgICAgICBlbmdpbmUucmVzZXQoKTsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIHRoaXMuY250ID0gZW5naW5lLmNvbmZpZy5rc21wczsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIHRoaXMuc3RhdHVzID0gMDsKICAgICAgICAgICAgICAgICAgICAgICAgICAgIHRoaXMuZmluaXNoZWRFbWl0dGVkID0gZmFsc2U7CiAgICAgICAgICAgICAgICAgICAgICAgICAgICBicmVhazsKICAgICAgICAgICAgICAgICAgICAgICAgZGVmYXVsdDoKICAgICAgICAgICAgICAgICAgICAgICAgICAgIHRoaXMuZW1pdCh7IHR5cGU6ICJjb25zb2xlIiwgcGF5bG9hZDogeyB0ZXh0OiBgZXJyb3I6IHVua25vd24gbWVzc2FnZSAnJHttc2cudHlwZX0nYCB9IH0pOwogICAgICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIH0KICAgICAgICAgICAgICAgIGNhdGNoIChlKSB7CiAgICAgICAgICAgICAgICAgICAgdGhpcy5lbWl0KHsgdHlwZTogImNvbnNvbGUiLCBwYXlsb2FkOiB7IHRleHQ6IGBlcnJvcjogJHtlLm1lc3NhZ2V9YCB9IH0pOwogICAgICAgICAgICAgICAgfQogICAgICAgICAgICB9CiAgICAgICAgfQogICAgICAgIHByb2Nlc3MoaW5wdXRzLCBvdXRwdXRzKSB7CiAgICAgICAgICAgIHRoaXMuYXBwbHlNZXNzYWdlcygpOwogICAgICAgICAgICBpZiAoIXRoaXMucnVubmluZykKICAgICAgICAgICAgICAgIHJldHVybiB0cnVlOwogICAgICAgICAgICBjb25zdCBlbmdpbmUgPSB0aGlzLmVuZ2luZTsKICAgICAgICAgICAgY29uc3QgY2ZnID0gZW5naW5lLmNvbmZpZzsKICAgICAgICAgICAgY29uc3Qga3NtcHMgPSBjZmcua3NtcHM7CiAgICAgICAgICAgIGNvbnN0IHplcm9kYmZzID0gY2ZnLnplcm9kYmZzOwogICAgICAgICAgICBjb25zdCBzcGluID0gZW5naW5lLnNwaW47CiAgICAgICAgICAgIGNvbnN0IHNwb3V0ID0gZW5naW5lLnNwb3V0OwogICAgICAgICAgICBsZXQgY250ID0gdGhpcy5jbnQ7CiAgICAgICAgICAgIGxldCBzdGF0dXMgPSB0aGlzLnN0YXR1czsKICAgICAgICAgICAgY29uc3QgYnVmZmVyTGVuID0gb3V0cHV0c1swXS5sZW5ndGg7CiAgICAgICAgICAgIGNvbnN0IG5JbiA9IE1hdGgubWluKGlucHV0cy5sZW5ndGgsIGNmZy5uY2hubHNJbik7CiAgICAgICAgICAgIGNvbnN0IG5PdXQgPSBvdXRwdXRzLmxlbmd0aDsKICAgICAgICAgICAgZm9yIChsZXQgaSA9IDA7IGkgPCBidWZmZXJMZW47IGkrKykgewogICAgICAgICAgICAgICAgaWYgKGNudCA9PT0ga3NtcHMgJiYgc3RhdHVzID09PSAwKSB7CiAgICAgICAgICAgICAgICAgICAgc3RhdHVzID0gZW5naW5lLnBlcmZvcm1CbG9jaygpOwogICAgICAgICAgICAgICAgICAgIGNudCA9IDA7CiAgICAgICAgICAgICAgICAgICAgaWYgKHN0YXR1cyAhPT0gMCAmJiAhdGhpcy5maW5pc2hlZEVtaXR0ZWQpIHsKICAgICAgICAgICAgICAgICAgICAgICAgdGhpcy5maW5pc2hlZEVtaXR0ZWQgPSB0cnVlOwogICAgICAgICAgICAgICAgICAgICAgICB0aGlzLmVtaXQoeyB0eXBlOiAiZmluaXNoZWQiLCBwYXlsb2FkOiB7fSB9KTsKICAgICAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICBpZiAoc3RhdHVzID09PSAwKSB7CiAgICAgICAgICAgICAgICAgICAgY29uc3QgaW5CYXNlID0gY250ICogY2ZnLm5jaG5sc0luOwogICAgICAgICAgICAgICAgICAgIGZvciAobGV0IGNoID0gMDsgY2ggPCBuSW47IGNoKyspIHsKICAgICAgICAgICAgICAgICAgICAgICAgc3BpbltpbkJhc2UgKyBjaF0gPSBpbnB1dHNbY2hdW2ldICogemVyb2RiZnM7CiAgICAgICAgICAgICAgICAgICAgfQogICAgICAgICAgICAgICAgICAgIGNvbnN0IG91dEJhc2UgPSBjbnQgKiBjZmcubmNobmxzOwogICAgICAgICAgICAgICAgICAgIGZvciAobGV0IGNoID0gMDsgY2ggPCBuT3V0OyBjaCsrKSB7CiAgICAgICAgICAgICAgICAgICAgICAgIG91dHB1dHNbY2hdW2ldID0gY2ggPCBjZmcubmNobmxzID8gc3BvdXRbb3V0QmFzZSArIGNoXSAvIHplcm9kYmZzIDogMDsKICAgICAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICAgICAgY250ICs9IDE7CiAgICAgICAgICAgICAgICB9CiAgICAgICAgICAgICAgICBlbHNlIHsKICAgICAgICAgICAgICAgICAgICBmb3IgKGxldCBjaCA9IDA7IGNoIDwgbk91dDsgY2grKykKICAgICAgICAgICAgICAgICAgICAgICAgb3V0cHV0c1tjaF1baV0gPSAwOwogICAgICAgICAgICAgICAgfQogICAgICAgICAgICB9CiAgICAgICAgICAgIHRoaXMuY250ID0gY250OwogICAgICAgICAgICB0aGlzLnN0YXR1cyA9IHN0YXR1czsKICAgICAgICAgICAgcmV0dXJuIHRydWU7CiAgICAgICAgfQogICAgfQogICAgZ2xvYmFsVGhpcy5fX2Jsb2Nrc3ludGhFbmdpbmVNb2R1bGUgPSB7CiAgICAgICAgdmVyc2lvbjogIjAuMS4wIiwKICAgICAgICBjcmVhdGVFbmdpbmU6IChjb25maWcpID0+IG5ldyBFbmdpbmUoY29uZmlnKSwKICAgICAgICBjcmVhdGVQcm9jZXNzb3JDb3JlOiAoY29uZmlnLCBlbWl0KSA9PiBuZXcgUHJvY2Vzc29yQ29yZShjb25maWcsIGVtaXQpLAogICAgICAgIHBhcnNlT3JjaGVzdHJhLAogICAgICAgIHBhcnNlU2NvcmUsCiAgICAgICAgbWlkaVRvRXZlbnQsCiAgICB9Owp9KSgpOwo=";
