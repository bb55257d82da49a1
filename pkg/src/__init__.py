# Root package; modules import each other as `src.<package>`.
