package org.example.util;

import java.util.function.Function;

public final class Strings {
    static {
        System.setProperty("strings.loaded", "true");
    }

    private Strings() {
    }

    public static String repeat(String s, int times) {
        StringBuilder sb = new StringBuilder();
        for (int i = 0; i < times; i++) {
            sb.append(s);
        }
        return sb.toString();
    }

    public static boolean isBlank(String s) {
        return s == null || s.trim().isEmpty();
    }

    public static Function<String, String> prefixer(String prefix) {
        return s -> {
            if (s == null) {
                return prefix;
            }
            return prefix + s;
        };
    }

    public static String join(String separator, String... parts) {
        return String.join(separator, parts);
    }

    enum Case {
        UPPER {
            @Override
            String apply(String s) {
                return s.toUpperCase();
            }
        },
        LOWER {
            @Override
            String apply(String s) {
                return s.toLowerCase();
            }
        };

        abstract String apply(String s);
    }
}
